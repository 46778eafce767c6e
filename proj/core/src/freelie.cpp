#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "hce/lie.hpp"

namespace hce {

namespace {

bool is_lyndon(const std::vector<int>& w) {
    const size_t n = w.size();
    if (n == 0) return false;
    if (n == 1) return true;
    // strictly smaller than every proper rotation
    for (size_t r = 1; r < n; ++r) {
        for (size_t i = 0; i < n; ++i) {
            int a = w[i];
            int b = w[(r + i) % n];
            if (a < b) break;
            if (a > b) return false;
            if (i + 1 == n) return false;  // equal rotation: periodic
        }
    }
    return true;
}

// Longest proper suffix that is Lyndon (standard factorization).
size_t std_factor(const std::vector<int>& w) {
    for (size_t s = 1; s < w.size(); ++s) {
        std::vector<int> suf(w.begin() + s, w.end());
        if (is_lyndon(suf)) return s;
    }
    throw std::logic_error("standard factorization failed");
}

std::shared_ptr<BracketTree> lyndon_tree(const std::vector<int>& w) {
    auto t = std::make_shared<BracketTree>();
    if (w.size() == 1) {
        t->kind = BracketTree::Leaf;
        t->leaf = w[0];
        return t;
    }
    size_t s = std_factor(w);
    t->kind = BracketTree::Br;
    t->left = lyndon_tree({w.begin(), w.begin() + s});
    t->right = lyndon_tree({w.begin() + s, w.end()});
    return t;
}

int tree_degree(const BracketTree& t, const FreeWGModule& gens) {
    switch (t.kind) {
        case BracketTree::Leaf: return gens.elt(t.leaf).degree;
        case BracketTree::Br: return tree_degree(*t.left, gens) + tree_degree(*t.right, gens);
        case BracketTree::Sq: return 2 * tree_degree(*t.left, gens);
    }
    return 0;
}

int tree_weight(const BracketTree& t, const FreeWGModule& gens) {
    switch (t.kind) {
        case BracketTree::Leaf: return gens.elt(t.leaf).weight;
        case BracketTree::Br: return tree_weight(*t.left, gens) + tree_weight(*t.right, gens);
        case BracketTree::Sq: return 2 * tree_weight(*t.left, gens);
    }
    return 0;
}

int tree_leaves(const BracketTree& t) {
    switch (t.kind) {
        case BracketTree::Leaf: return 1;
        case BracketTree::Br: return tree_leaves(*t.left) + tree_leaves(*t.right);
        case BracketTree::Sq: return 2 * tree_leaves(*t.left);
    }
    return 0;
}

}  // namespace

std::string bracket_tree_name(const BracketTree& t, const FreeWGModule& gens) {
    switch (t.kind) {
        case BracketTree::Leaf: return "(" + gens.elt(t.leaf).name + ")";
        case BracketTree::Br:
            return "[" + bracket_tree_name(*t.left, gens) + "," + bracket_tree_name(*t.right, gens) + "]";
        case BracketTree::Sq: {
            std::string s = bracket_tree_name(*t.left, gens);
            return "[" + s + "," + s + "]";
        }
    }
    return "?";
}

int FreeLieAlgebra::word_degree(const Word& w) const {
    int d = 0;
    for (int i : w) d += gens_.elt(i).degree;
    return d;
}

int FreeLieAlgebra::word_weight(const Word& w) const {
    int d = 0;
    for (int i : w) d += gens_.elt(i).weight;
    return d;
}

FreeLieAlgebra::TensorElt FreeLieAlgebra::tensor_bracket(const TensorElt& a, const TensorElt& b) const {
    TensorElt out;
    auto add = [&](const Word& w, const Scalar& c) {
        if (ring_.is_zero(c)) return;
        auto it = out.find(w);
        if (it == out.end()) out[w] = c;
        else {
            it->second = ring_.add(it->second, c);
            if (ring_.is_zero(it->second)) out.erase(it);
        }
    };
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) {
            if (word_weight(u) + word_weight(v) > max_weight_) continue;
            Scalar c = ring_.mul(cu, cv);
            Word uv = u; uv.insert(uv.end(), v.begin(), v.end());
            add(uv, c);
            Word vu = v; vu.insert(vu.end(), u.begin(), u.end());
            int sign = koszul_sign(word_degree(u), word_degree(v));
            add(vu, sign > 0 ? ring_.neg(c) : c);
        }
    return out;
}

FreeLieAlgebra::FreeLieAlgebra(const Ring& ring, FreeWGModule generators, int max_weight)
    : ring_(ring), gens_(std::move(generators)), max_weight_(max_weight) {
    for (const auto& b : gens_.basis())
        if (b.weight < 1) throw std::invalid_argument("free Lie generator of weight 0: " + b.name);

    // words of weight <= W, collected and filtered to Lyndon words;
    // generators are visited in weight order so each node only touches
    // letters that still fit
    std::vector<int> by_weight(gens_.rank());
    for (int i = 0; i < gens_.rank(); ++i) by_weight[i] = i;
    std::stable_sort(by_weight.begin(), by_weight.end(), [&](int a, int b) {
        return gens_.elt(a).weight < gens_.elt(b).weight;
    });
    std::vector<Word> lyndon;
    Word cur;
    std::function<void(int)> rec = [&](int wleft) {
        if (!cur.empty() && is_lyndon(cur)) lyndon.push_back(cur);
        for (int i : by_weight) {
            int w = gens_.elt(i).weight;
            if (w > wleft) break;
            cur.push_back(i);
            rec(wleft - w);
            cur.pop_back();
        }
    };
    rec(max_weight_);

    struct Entry {
        int weight, length;
        Word word;
        std::shared_ptr<BracketTree> tree;
    };
    std::vector<Entry> entries;
    for (const auto& w : lyndon) {
        auto t = lyndon_tree(w);
        entries.push_back({word_weight(w), static_cast<int>(w.size()), w, t});
        if (tree_degree(*t, gens_) % 2 != 0 && 2 * word_weight(w) <= max_weight_) {
            auto sq = std::make_shared<BracketTree>();
            sq->kind = BracketTree::Sq;
            sq->left = t;
            Word ww = w; ww.insert(ww.end(), w.begin(), w.end());
            entries.push_back({2 * word_weight(w), 2 * static_cast<int>(w.size()), ww, sq});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        if (a.length != b.length) return a.length < b.length;
        return a.word < b.word;
    });

    std::vector<BasisElt> basis;
    for (const auto& e : entries) {
        basis.push_back({bracket_tree_name(*e.tree, gens_), tree_degree(*e.tree, gens_), e.weight});
        trees_.push_back(*e.tree);
        word_length_.push_back(e.length);
    }
    module_ = FreeWGModule(gens_.spec(), std::move(basis));

    // tensor representatives
    tensor_.resize(trees_.size());
    std::function<TensorElt(const BracketTree&)> tten = [&](const BracketTree& t) -> TensorElt {
        switch (t.kind) {
            case BracketTree::Leaf: {
                TensorElt e;
                e[{t.leaf}] = ring_.one();
                return e;
            }
            case BracketTree::Br:
                return tensor_bracket(tten(*t.left), tten(*t.right));
            case BracketTree::Sq: {
                TensorElt l = tten(*t.left);
                return tensor_bracket(l, l);
            }
        }
        return {};
    };
    for (size_t i = 0; i < trees_.size(); ++i) {
        tensor_[i] = tten(trees_[i]);
        auto [_, fresh] = by_leading_word_.emplace(tensor_[i].begin()->first, static_cast<int>(i));
        if (!fresh) throw std::logic_error("free Lie basis leading words collide");
    }
}

Vec FreeLieAlgebra::expand_in_basis(TensorElt t, const std::string& what) const {
    // The leading (lex-least) word of every basis representative occurs in no
    // other representative's leading position and carries a unit (1 or 2)
    // coefficient, so repeated cancellation of the least word terminates.
    Vec result;
    while (!t.empty()) {
        const Word& w = t.begin()->first;
        auto it = by_leading_word_.find(w);
        if (it == by_leading_word_.end())
            throw std::logic_error("free Lie element not in basis span: " + what);
        int b = it->second;
        Scalar coeff = ring_.div(t.begin()->second, tensor_[b].begin()->second);
        for (const auto& [word, c] : tensor_[b]) {
            Scalar adj = ring_.neg(ring_.mul(coeff, c));
            auto pos = t.find(word);
            if (pos == t.end()) {
                if (!ring_.is_zero(adj)) t.emplace(word, adj);
            } else {
                pos->second = ring_.add(pos->second, adj);
                if (ring_.is_zero(pos->second)) t.erase(pos);
            }
        }
        vec_add_term(ring_, result, b, coeff);
    }
    return result;
}

const Vec& FreeLieAlgebra::bracket(int a, int b) const {
    auto it = cache_.find({a, b});
    if (it != cache_.end()) return it->second;

    const auto& ea = module_.elt(a);
    const auto& eb = module_.elt(b);
    Vec result;
    if (ea.weight + eb.weight <= max_weight_) {
        TensorElt t = tensor_bracket(tensor_[a], tensor_[b]);
        if (!t.empty())
            result = expand_in_basis(std::move(t), "[" + ea.name + "," + eb.name + "]");
    }
    auto [pos, _] = cache_.emplace(std::make_pair(a, b), std::move(result));
    return pos->second;
}

LieOps FreeLieAlgebra::ops() const {
    LieOps ops;
    ops.module = &module_;
    ops.bracket = [this](int a, int b) { return bracket(a, b); };
    return ops;
}

GradedLieAlgebra FreeLieAlgebra::materialize() const {
    GradedLieAlgebra g;
    g.module = module_;
    for (int a = 0; a < module_.rank(); ++a)
        for (int b = 0; b < module_.rank(); ++b) {
            const Vec& v = bracket(a, b);
            if (!v.empty()) g.bracket[{a, b}] = v;
        }
    return g;
}

}  // namespace hce
