#ifndef LPA_QUIVER_HPP
#define LPA_QUIVER_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpa {

struct QuiverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RawArrow {
    std::string name, src, dst;
};

// Unvalidated input, as read from a file or built in code.
struct QuiverDescription {
    std::vector<std::string> vertices;
    std::vector<RawArrow> arrows;
    std::vector<std::pair<std::string, std::string>> special;  // (vertex, arrow)
};

inline bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

// A finite quiver with its vertex classification and designated special
// arrows. Vertices and arrows are stored sorted by name, so index order is
// byte order; everything downstream keys off the indices.
class Quiver {
public:
    static constexpr int kNoSpecial = -1;

    static Quiver validate(const QuiverDescription& d) {
        Quiver q;
        q.vertex_names_ = d.vertices;
        std::sort(q.vertex_names_.begin(), q.vertex_names_.end());
        for (std::size_t i = 0; i < q.vertex_names_.size(); ++i) {
            const std::string& v = q.vertex_names_[i];
            if (!valid_identifier(v)) throw QuiverError("bad vertex name: '" + v + "'");
            if (!q.vertex_index_.emplace(v, i).second)
                throw QuiverError("duplicate vertex: " + v);
        }
        std::vector<RawArrow> arrows = d.arrows;
        std::sort(arrows.begin(), arrows.end(),
                  [](const RawArrow& a, const RawArrow& b) { return a.name < b.name; });
        for (std::size_t i = 0; i < arrows.size(); ++i) {
            const RawArrow& a = arrows[i];
            if (!valid_identifier(a.name)) throw QuiverError("bad arrow name: '" + a.name + "'");
            if (!q.arrow_index_.emplace(a.name, i).second)
                throw QuiverError("duplicate arrow: " + a.name);
            auto si = q.vertex_index_.find(a.src), ti = q.vertex_index_.find(a.dst);
            if (si == q.vertex_index_.end())
                throw QuiverError("arrow " + a.name + " has unknown source " + a.src);
            if (ti == q.vertex_index_.end())
                throw QuiverError("arrow " + a.name + " has unknown target " + a.dst);
            q.arrow_names_.push_back(a.name);
            q.src_.push_back(static_cast<std::uint32_t>(si->second));
            q.dst_.push_back(static_cast<std::uint32_t>(ti->second));
        }
        q.out_.assign(q.vertex_names_.size(), {});
        for (std::uint32_t a = 0; a < q.arrow_names_.size(); ++a)
            q.out_[q.src_[a]].push_back(a);

        q.special_.assign(q.vertex_names_.size(), kNoSpecial);
        for (const auto& [v, a] : d.special) {
            auto vi = q.vertex_index_.find(v);
            if (vi == q.vertex_index_.end()) throw QuiverError("special at unknown vertex " + v);
            auto ai = q.arrow_index_.find(a);
            if (ai == q.arrow_index_.end()) throw QuiverError("unknown special arrow " + a);
            if (q.out_[vi->second].empty())
                throw QuiverError("special arrow declared at sink " + v);
            if (q.src_[ai->second] != vi->second)
                throw QuiverError("special arrow " + a + " does not start at " + v);
            q.special_[vi->second] = static_cast<int>(ai->second);
        }
        // Default special arrow: least outgoing arrow name. Arrows are
        // name-sorted, so the least index wins.
        for (std::size_t v = 0; v < q.vertex_names_.size(); ++v)
            if (q.special_[v] == kNoSpecial && !q.out_[v].empty())
                q.special_[v] = static_cast<int>(q.out_[v].front());
        return q;
    }

    std::size_t num_vertices() const { return vertex_names_.size(); }
    std::size_t num_arrows() const { return arrow_names_.size(); }

    const std::string& vertex_name(std::uint32_t v) const { return vertex_names_[v]; }
    const std::string& arrow_name(std::uint32_t a) const { return arrow_names_[a]; }

    std::optional<std::uint32_t> vertex(const std::string& name) const {
        auto it = vertex_index_.find(name);
        if (it == vertex_index_.end()) return std::nullopt;
        return static_cast<std::uint32_t>(it->second);
    }
    std::optional<std::uint32_t> arrow(const std::string& name) const {
        auto it = arrow_index_.find(name);
        if (it == arrow_index_.end()) return std::nullopt;
        return static_cast<std::uint32_t>(it->second);
    }

    std::uint32_t source(std::uint32_t a) const { return src_[a]; }
    std::uint32_t target(std::uint32_t a) const { return dst_[a]; }
    const std::vector<std::uint32_t>& out_arrows(std::uint32_t v) const { return out_[v]; }

    bool is_regular(std::uint32_t v) const { return !out_[v].empty(); }
    bool is_sink(std::uint32_t v) const { return out_[v].empty(); }

    // Special arrow at a regular vertex; kNoSpecial at sinks.
    int special_arrow(std::uint32_t v) const { return special_[v]; }
    bool is_special(std::uint32_t a) const { return special_[src_[a]] == static_cast<int>(a); }

    std::vector<std::uint32_t> regular_vertices() const {
        std::vector<std::uint32_t> r;
        for (std::uint32_t v = 0; v < num_vertices(); ++v)
            if (is_regular(v)) r.push_back(v);
        return r;
    }

    // True when Q has no directed cycle, i.e. L_k(Q) is finite-dimensional.
    bool is_acyclic() const {
        std::vector<int> state(num_vertices(), 0);
        for (std::uint32_t v = 0; v < num_vertices(); ++v)
            if (state[v] == 0 && has_cycle_from(v, state)) return false;
        return true;
    }

private:
    bool has_cycle_from(std::uint32_t v, std::vector<int>& state) const {
        state[v] = 1;
        for (std::uint32_t a : out_[v]) {
            std::uint32_t w = dst_[a];
            if (state[w] == 1) return true;
            if (state[w] == 0 && has_cycle_from(w, state)) return true;
        }
        state[v] = 2;
        return false;
    }

    std::vector<std::string> vertex_names_, arrow_names_;
    std::map<std::string, std::size_t> vertex_index_, arrow_index_;
    std::vector<std::uint32_t> src_, dst_;
    std::vector<std::vector<std::uint32_t>> out_;
    std::vector<int> special_;
};

// One letter of the double quiver: an arrow or its ghost.
struct Letter {
    std::uint32_t arrow;
    bool ghost;

    bool operator==(const Letter&) const = default;
    // Real before ghost at equal arrow index; arrows are name-sorted.
    auto operator<=>(const Letter&) const = default;
};

inline std::uint32_t letter_source(const Quiver& q, Letter l) {
    return l.ghost ? q.target(l.arrow) : q.source(l.arrow);
}
inline std::uint32_t letter_target(const Quiver& q, Letter l) {
    return l.ghost ? q.source(l.arrow) : q.target(l.arrow);
}

// A composable word over the double quiver. Letters are stored in
// application order: letters[0] acts first. A length-0 word is a vertex
// idempotent e_i.
struct Word {
    std::vector<Letter> letters;
    std::uint32_t src = 0, dst = 0;

    std::size_t length() const { return letters.size(); }
    bool trivial() const { return letters.empty(); }

    int degree() const {
        int d = 0;
        for (Letter l : letters) d += l.ghost ? -1 : 1;
        return d;
    }

    bool operator==(const Word& o) const {
        return letters == o.letters && src == o.src && dst == o.dst;
    }

    // Canonical order: length, then the letter sequence; trivial words by
    // vertex. Deterministic printing and matrix bases depend on this.
    bool operator<(const Word& o) const {
        if (length() != o.length()) return length() < o.length();
        if (trivial()) return src < o.src;
        return letters < o.letters;
    }

    static Word trivial_at(std::uint32_t v) { return Word{{}, v, v}; }

    static Word from_letters(const Quiver& q, const std::vector<Letter>& ls) {
        if (ls.empty()) throw std::invalid_argument("use trivial_at for empty words");
        for (std::size_t j = 0; j + 1 < ls.size(); ++j)
            if (letter_target(q, ls[j]) != letter_source(q, ls[j + 1]))
                throw std::invalid_argument("letters not composable");
        return Word{ls, letter_source(q, ls.front()), letter_target(q, ls.back())};
    }
};

// Concatenation w2 after w1; nullopt when endpoints do not match.
inline std::optional<Word> concat(const Word& w2, const Word& w1) {
    if (w2.src != w1.dst) return std::nullopt;
    Word r;
    r.letters = w1.letters;
    r.letters.insert(r.letters.end(), w2.letters.begin(), w2.letters.end());
    r.src = w1.src;
    r.dst = w2.dst;
    return r;
}

// p -> p* for a path in real arrows; identity on trivial words.
inline Word ghost(const Word& w) {
    for (Letter l : w.letters)
        if (l.ghost) throw std::invalid_argument("ghost() expects a path in Q");
    Word r;
    r.letters.reserve(w.length());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(Letter{it->arrow, true});
    r.src = w.dst;
    r.dst = w.src;
    return r;
}

// The 2|Q1| letters of the double quiver, in canonical order.
inline std::vector<Letter> double_quiver_alphabet(const Quiver& q) {
    std::vector<Letter> ls;
    for (std::uint32_t a = 0; a < q.num_arrows(); ++a) ls.push_back(Letter{a, false});
    for (std::uint32_t a = 0; a < q.num_arrows(); ++a) ls.push_back(Letter{a, true});
    return ls;
}

}  // namespace lpa

#endif
