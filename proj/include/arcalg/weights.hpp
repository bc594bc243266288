#pragma once

// Diagrammatic weights for the type-D arc algebra: finite labellings of the
// positions 1,2,... by {v,^,x,o}, grouped into blocks (skeleton + parity),
// with the block enumeration and the (reversed) Bruhat order.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace arcalg {

enum class Label : unsigned char { Down = 0, Up = 1, Cross = 2, Circ = 3 };
enum class Slot : unsigned char { Bullet = 0, Cross = 1, Circ = 2 };

inline char to_char(Label l) {
    switch (l) {
        case Label::Down: return 'v';
        case Label::Up: return '^';
        case Label::Cross: return 'x';
        default: return 'o';
    }
}

inline char to_char(Slot s) {
    switch (s) {
        case Slot::Bullet: return 'b';
        case Slot::Cross: return 'x';
        default: return 'o';
    }
}

// A block: which positions carry weight labels (bullets), which are fixed as
// x or o, plus the parity of #(^) shared by all member weights.
struct Block {
    std::vector<Slot> skeleton;  // skeleton[i] is position i+1; trailing o trimmed
    int parity = 0;              // (#^) mod 2

    void normalize() {
        while (!skeleton.empty() && skeleton.back() == Slot::Circ) skeleton.pop_back();
        parity &= 1;
    }

    bool operator==(const Block& o) const { return parity == o.parity && skeleton == o.skeleton; }
    bool operator!=(const Block& o) const { return !(*this == o); }
    bool operator<(const Block& o) const {
        if (parity != o.parity) return parity < o.parity;
        return skeleton < o.skeleton;
    }

    Slot slot(int p) const {
        if (p < 1) throw std::out_of_range("position must be >= 1");
        return p <= (int)skeleton.size() ? skeleton[p - 1] : Slot::Circ;
    }

    std::vector<int> bullets() const {
        std::vector<int> out;
        for (int p = 1; p <= (int)skeleton.size(); ++p)
            if (skeleton[p - 1] == Slot::Bullet) out.push_back(p);
        return out;
    }

    // Bullet rank of p: #{bullet positions q <= p}. Only defined on bullets.
    int pos(int p) const {
        if (slot(p) != Slot::Bullet) throw std::invalid_argument("pos: not a bullet position");
        int r = 0;
        for (int q = 1; q <= p; ++q)
            if (skeleton[q - 1] == Slot::Bullet) ++r;
        return r;
    }

    std::string skeleton_string() const {
        std::string s;
        for (Slot x : skeleton) s += to_char(x);
        return s;
    }
};

// principal block: k bullets, nothing else.
inline Block principal_block(int k, int parity) {
    Block b;
    b.skeleton.assign(k, Slot::Bullet);
    b.parity = parity & 1;
    return b;
}

struct Weight {
    std::vector<Label> labels;  // labels[i] is position i+1; trailing o trimmed

    void normalize() {
        while (!labels.empty() && labels.back() == Label::Circ) labels.pop_back();
    }

    bool operator==(const Weight& o) const { return labels == o.labels; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const { return labels < o.labels; }

    Label label(int p) const {
        if (p < 1) throw std::out_of_range("position must be >= 1");
        return p <= (int)labels.size() ? labels[p - 1] : Label::Circ;
    }

    void set_label(int p, Label l) {
        if (p < 1) throw std::out_of_range("position must be >= 1");
        if (p > (int)labels.size()) labels.resize(p, Label::Circ);
        labels[p - 1] = l;
        normalize();
    }

    std::string str() const {
        std::string s;
        for (Label l : labels) s += to_char(l);
        return s;
    }
};

inline Weight parse_weight(const std::string& text) {
    Weight w;
    for (char c : text) {
        switch (c) {
            case 'v': w.labels.push_back(Label::Down); break;
            case '^': w.labels.push_back(Label::Up); break;
            case 'x': w.labels.push_back(Label::Cross); break;
            case 'o': w.labels.push_back(Label::Circ); break;
            default: throw std::invalid_argument(std::string("parse_weight: bad character '") + c + "'");
        }
    }
    w.normalize();
    return w;
}

inline Block block_of(const Weight& w) {
    Block b;
    int ups = 0;
    for (Label l : w.labels) {
        switch (l) {
            case Label::Up: ++ups; [[fallthrough]];
            case Label::Down: b.skeleton.push_back(Slot::Bullet); break;
            case Label::Cross: b.skeleton.push_back(Slot::Cross); break;
            default: b.skeleton.push_back(Slot::Circ); break;
        }
    }
    b.parity = ups & 1;
    b.normalize();
    return b;
}

inline bool same_block(const Weight& a, const Weight& b) { return block_of(a) == block_of(b); }

namespace detail {

// Bullet-label bit code: bit j set iff the (j+1)-th bullet carries ^.
inline std::uint64_t bullet_code(const Weight& w, const std::vector<int>& bullets) {
    std::uint64_t c = 0;
    for (std::size_t j = 0; j < bullets.size(); ++j)
        if (w.label(bullets[j]) == Label::Up) c |= (std::uint64_t)1 << j;
    return c;
}

inline Weight weight_from_code(const Block& b, const std::vector<int>& bullets, std::uint64_t code) {
    Weight w;
    w.labels.reserve(b.skeleton.size());
    for (int p = 1; p <= (int)b.skeleton.size(); ++p) {
        switch (b.slot(p)) {
            case Slot::Cross: w.labels.push_back(Label::Cross); break;
            case Slot::Circ: w.labels.push_back(Label::Circ); break;
            default: w.labels.push_back(Label::Down); break;
        }
    }
    for (std::size_t j = 0; j < bullets.size(); ++j)
        if (code >> j & 1) w.labels[bullets[j] - 1] = Label::Up;
    w.normalize();
    return w;
}

}  // namespace detail

// All weights of the block, ordered by the bullet bit code (first bullet =
// least significant bit, ^ = 1). Reproduces the order lambda_1..lambda_8 of
// the k = 4 running example.
inline std::vector<Weight> weights_in_block(const Block& b) {
    std::vector<int> bullets = b.bullets();
    if (bullets.size() >= 26) throw std::invalid_argument("weights_in_block: block too large");
    std::vector<Weight> out;
    if (bullets.empty()) {
        if (b.parity == 0) out.push_back(detail::weight_from_code(b, bullets, 0));
        return out;
    }
    out.reserve((std::size_t)1 << (bullets.size() - 1));
    for (std::uint64_t code = 0; code < ((std::uint64_t)1 << bullets.size()); ++code) {
        if ((std::popcount(code) & 1) != b.parity) continue;
        out.push_back(detail::weight_from_code(b, bullets, code));
    }
    return out;
}

inline int pos(const Block& b, int p) { return b.pos(p); }

namespace detail {

// Decreasing basic moves on the bullet label sequence:
//   ^v -> v^ at adjacent bullet ranks, and vv -> ^^ at bullet ranks (1,2).
// Either move raises the bit code, so smaller weights carry larger codes.
inline std::vector<std::uint64_t> decreasing_moves(std::uint64_t code, std::size_t m) {
    std::vector<std::uint64_t> out;
    for (std::size_t j = 0; j + 1 < m; ++j) {
        bool lo = code >> j & 1, hi = code >> (j + 1) & 1;
        if (lo && !hi) out.push_back(code ^ ((std::uint64_t)3 << j));  // ^v -> v^
    }
    if (m >= 2 && !(code & 3)) out.push_back(code | 3);  // vv -> ^^ at ranks 1,2
    return out;
}

struct BruhatClosure {
    std::map<std::uint64_t, std::size_t> index;      // code -> dense index
    std::vector<std::vector<bool>> leq;              // leq[i][j]: weight i <= weight j
};

inline const BruhatClosure& bruhat_closure(const Block& b) {
    static std::map<Block, BruhatClosure> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(b);
    if (it != cache.end()) return it->second;

    std::vector<int> bullets = b.bullets();
    std::size_t m = bullets.size();
    if (m > 13) throw std::invalid_argument("bruhat order: block too large for closure");
    BruhatClosure cl;
    std::vector<std::uint64_t> codes;
    for (std::uint64_t code = 0; code < ((std::uint64_t)1 << m); ++code)
        if (m == 0 ? b.parity == 0 : (std::popcount(code) & 1) == b.parity) codes.push_back(code);
    for (std::size_t i = 0; i < codes.size(); ++i) cl.index[codes[i]] = i;
    cl.leq.assign(codes.size(), std::vector<bool>(codes.size(), false));
    // Descending code order: every move target is processed before its source.
    for (std::size_t ii = codes.size(); ii-- > 0;) {
        std::uint64_t c = codes[ii];
        cl.leq[ii][ii] = true;
        for (std::uint64_t d : decreasing_moves(c, m)) {
            std::size_t jj = cl.index.at(d);
            for (std::size_t t = 0; t < codes.size(); ++t)
                if (cl.leq[jj][t]) cl.leq[t].size(), cl.leq[jj][t] = cl.leq[jj][t];
        }
        for (std::uint64_t d : decreasing_moves(c, m)) {
            std::size_t jj = cl.index.at(d);
            for (std::size_t t = 0; t < codes.size(); ++t)
                if (cl.leq[t][jj]) cl.leq[t][ii] = true;
        }
    }
    return cache.emplace(b, std::move(cl)).first->second;
}

}  // namespace detail

// lambda <= mu in the paper's (reversed) Bruhat order: lambda is reachable
// from mu by decreasing basic moves.
inline bool bruhat_leq(const Weight& lam, const Weight& mu) {
    Block b = block_of(lam);
    if (b != block_of(mu)) throw std::invalid_argument("bruhat_leq: different blocks");
    const auto& cl = detail::bruhat_closure(b);
    std::vector<int> bullets = b.bullets();
    std::size_t i = cl.index.at(detail::bullet_code(lam, bullets));
    std::size_t j = cl.index.at(detail::bullet_code(mu, bullets));
    return cl.leq[i][j];
}

}  // namespace arcalg
