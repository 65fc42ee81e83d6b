#include "schubert/bruhat.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace schubert {

WeylWord::WeylWord(const RootSystem& sys, std::vector<int> letters)
    : system_(&sys), letters_(std::move(letters)) {
    for (int l : letters_)
        if (l < 1 || l > sys.rank())
            throw MathError("letter " + std::to_string(l) + " out of range for " + sys.name());
}

bool WeylWord::has_distinct_letters() const {
    std::set<int> seen(letters_.begin(), letters_.end());
    return seen.size() == letters_.size();
}

RatMatrix WeylWord::action_matrix() const {
    const int n = system_->rank();
    RatMatrix m = RatMatrix::identity(n);
    // column j of the result = image of zeta_j
    for (int j = 1; j <= n; ++j) {
        Weight w = system_->fundamental_weight(j);
        w = apply(w);
        for (int i = 0; i < n; ++i) m.at(i, j - 1) = w.coords[i];
    }
    return m;
}

Weight WeylWord::apply(const Weight& w) const {
    Weight out = w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out = system_->reflect(*it, out);
    return out;
}

Coweight WeylWord::apply(const Coweight& h) const {
    Coweight out = h;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out = system_->reflect_coweight(*it, out);
    return out;
}

WeylWord WeylWord::with_letter_deleted(int position) const {
    if (position < 0 || position >= length()) throw MathError("deletion position out of range");
    std::vector<int> rest = letters_;
    rest.erase(rest.begin() + position);
    return WeylWord(*system_, std::move(rest));
}

std::string WeylWord::str() const {
    if (letters_.empty()) return "e";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << ",";
        os << letters_[i];
    }
    return os.str();
}

WeylWord WeylWord::parse(const RootSystem& sys, const std::string& text) {
    std::vector<int> letters;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        auto b = token.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        auto e = token.find_last_not_of(" \t");
        token = token.substr(b, e - b + 1);
        if (token == "e" && letters.empty()) continue;  // explicit empty word
        try {
            letters.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw MathError("cannot parse word letter '" + token + "'");
        }
    }
    return WeylWord(sys, std::move(letters));
}

Admissibility is_admissible(const WeylWord& w) {
    if (!w.has_distinct_letters()) return {false, "letters are not pairwise distinct"};
    const auto& letters = w.letters();
    const RootSystem& sys = w.system();
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
        bool linked = false;
        for (std::size_t j = i + 1; j < letters.size(); ++j)
            if (!sys.commutes(letters[i], letters[j])) {
                linked = true;
                break;
            }
        if (!linked)
            return {false, "letter " + std::to_string(letters[i]) + " at position " +
                               std::to_string(i + 1) +
                               " commutes with every letter to its right"};
    }
    return {true, ""};
}

void require_admissible(const WeylWord& w) {
    auto adm = is_admissible(w);
    if (!adm.ok) throw MathError("word (" + w.str() + ") is not admissible: " + adm.reason);
}

std::vector<CoverDatum> covers(const WeylWord& w) {
    if (!w.has_distinct_letters())
        throw MathError("covers need a word with pairwise-distinct letters");
    const RootSystem& sys = w.system();
    std::vector<CoverDatum> out;
    out.reserve(w.length());
    for (int p = 0; p < w.length(); ++p) {
        Coweight h = sys.simple_coroot(w.letters()[p]);
        for (int q = p - 1; q >= 0; --q) h = sys.reflect_coweight(w.letters()[q], h);
        out.push_back(CoverDatum{w.with_letter_deleted(p), std::move(h), p});
    }
    return out;
}

MaximalChains::MaximalChains(const WeylWord& w) : word_(w) {
    require_admissible(w);
    order_.resize(w.length());
    for (int i = 0; i < w.length(); ++i) order_[i] = i;
}

std::optional<std::vector<WeylWord>> MaximalChains::next() {
    if (done_) return std::nullopt;
    if (!first_ && !std::next_permutation(order_.begin(), order_.end())) {
        done_ = true;
        return std::nullopt;
    }
    first_ = false;
    std::vector<WeylWord> chain{word_};
    WeylWord cur = word_;
    // order_ lists deletion positions relative to the original word; convert
    // each to the position within the current subword
    std::vector<int> alive(word_.length());
    for (int i = 0; i < word_.length(); ++i) alive[i] = i;
    for (int step = 0; step < word_.length(); ++step) {
        const int original = order_[step];
        auto it = std::find(alive.begin(), alive.end(), original);
        const int pos = static_cast<int>(it - alive.begin());
        alive.erase(it);
        cur = cur.with_letter_deleted(pos);
        chain.push_back(cur);
    }
    if (word_.length() == 0) done_ = true;
    return chain;
}

WeylWord projective_subdiagram_word(const RootSystem& sys, int r, const std::vector<int>& path) {
    if (path.empty()) throw MathError("subdiagram path is empty");
    if (r < 1 || r > sys.rank()) throw MathError("orbit index out of range");
    if (path.front() != r)
        throw MathError("subdiagram path must start at the removed root " + std::to_string(r));
    std::set<int> seen;
    for (int node : path) {
        if (node < 1 || node > sys.rank()) throw MathError("subdiagram node out of range");
        if (!seen.insert(node).second) throw MathError("subdiagram path repeats a node");
    }
    // distinctness plus path.front() == r already forces every interior node into J
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const Integer& a = sys.cartan(path[i], path[i + 1]);
        const Integer& b = sys.cartan(path[i + 1], path[i]);
        if (a == 0)
            throw MathError("subdiagram path nodes " + std::to_string(path[i]) + "," +
                            std::to_string(path[i + 1]) + " are not adjacent");
        if (!(a == -1 && b == -1))
            throw MathError("subdiagram path crosses a multiple edge at " +
                            std::to_string(path[i]) + "," + std::to_string(path[i + 1]) +
                            " (roots of unequal length)");
    }
    // non-consecutive nodes must not be adjacent, else the subdiagram is not a chain
    for (std::size_t i = 0; i < path.size(); ++i)
        for (std::size_t j = i + 2; j < path.size(); ++j)
            if (sys.cartan(path[i], path[j]) != 0)
                throw MathError("subdiagram is not a chain: nodes " + std::to_string(path[i]) +
                                "," + std::to_string(path[j]) + " are adjacent");
    std::vector<int> letters(path.rbegin(), path.rend());
    return WeylWord(sys, std::move(letters));
}

std::vector<int> named_subdiagram_path(const RootSystem& sys, int r, const std::string& name) {
    const int n = sys.rank();
    if (r < 1 || r > n) throw MathError("orbit index out of range");
    if (sys.family() == Family::B) {
        if (name != "Gamma") throw MathError("family B only has the subdiagram Gamma");
        if (r >= n) throw MathError("Gamma needs r < n for family B");
        std::vector<int> path;
        for (int i = r; i <= n - 1; ++i) path.push_back(i);
        return path;
    }
    if (sys.family() == Family::D) {
        if (name == "Gamma") {
            if (r >= n - 1) throw MathError("Gamma needs r < n-1 for family D");
            std::vector<int> path;
            for (int i = r; i <= n - 1; ++i) path.push_back(i);
            return path;
        }
        if (name == "GammaPrime") {
            if (r == n - 1) throw MathError("GammaPrime is undefined at r = n-1");
            if (r == n)
                throw MathError("GammaPrime degenerates at r = n; use the empty word");
            std::vector<int> path;
            for (int i = r; i <= n - 2; ++i) path.push_back(i);
            path.push_back(n);
            return path;
        }
        if (name == "GammaDoublePrime") {
            if (r != n - 1) throw MathError("GammaDoublePrime needs r = n-1");
            return {n - 1, n - 2};
        }
        throw MathError("unknown subdiagram '" + name + "'");
    }
    if (sys.family() == Family::E6 && name == "Gamma" && r == 6) return {6, 3};
    throw MathError("no named subdiagram '" + name + "' for " + sys.name());
}

}  // namespace schubert
