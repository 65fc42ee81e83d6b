#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schubert/rootdata.hpp"

namespace schubert {

// A word in simple reflections. The leftmost letter acts last: the list
// (4,6,5) denotes the composition s4 o s6 o s5, matching the printed order
// of cell labels.
class WeylWord {
public:
    WeylWord(const RootSystem& sys, std::vector<int> letters);

    const RootSystem& system() const { return *system_; }
    const std::vector<int>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    bool has_distinct_letters() const;

    // Matrix of the composed reflection on zeta coordinates.
    RatMatrix action_matrix() const;

    Weight apply(const Weight& w) const;
    Coweight apply(const Coweight& h) const;

    WeylWord with_letter_deleted(int position) const;  // 0-based

    std::string str() const;  // "4,6,5"; "e" for the empty word
    static WeylWord parse(const RootSystem& sys, const std::string& text);

    bool operator==(const WeylWord& o) const {
        return system_ == o.system_ && letters_ == o.letters_;
    }

private:
    const RootSystem* system_;
    std::vector<int> letters_;
};

struct Admissibility {
    bool ok = false;
    std::string reason;  // names the violating letter when not admissible
};

// Admissible: letters pairwise distinct, and every letter except the
// rightmost fails to commute with some letter strictly to its right.
Admissibility is_admissible(const WeylWord& w);

void require_admissible(const WeylWord& w);

// One Bruhat cover below an admissible (distinct-letter) word: the subword
// with one letter deleted, together with the coroot of the reflection
// joining the two, h = v(h_{letter}) for v the prefix left of the deletion.
struct CoverDatum {
    WeylWord subword;
    Coweight reflection_coroot;
    int deleted_position;  // 0-based
};

// All single-deletion covers. Requires pairwise-distinct letters (that is
// what makes subwords biject with Weyl-group elements below the word).
std::vector<CoverDatum> covers(const WeylWord& w);

// Streams all length! maximal deletion chains from w down to the empty word,
// in lexicographic order of the deletion-position sequences. Each chain
// starts at w and ends with the empty word.
class MaximalChains {
public:
    explicit MaximalChains(const WeylWord& w);
    std::optional<std::vector<WeylWord>> next();

private:
    WeylWord word_;
    std::vector<int> order_;  // current permutation of deletion positions
    bool done_ = false;
    bool first_ = true;
};

// Word of a projective subdiagram: path[0] is the only root outside
// J = Pi \ {alpha_r} and must equal r; consecutive roots are adjacent with
// single edges (the chain is A_k shaped); the word is read back-to-front so
// the r-node reflection acts first.
WeylWord projective_subdiagram_word(const RootSystem& sys, int r,
                                    const std::vector<int>& path);

// The named subdiagrams used for the orthogonal families: "Gamma" (ends at
// the last A-chain node), "GammaPrime" (ends at the spin node of D),
// "GammaDoublePrime" (the two-node diagram at r = n-1 in D).
std::vector<int> named_subdiagram_path(const RootSystem& sys, int r, const std::string& name);

}  // namespace schubert
