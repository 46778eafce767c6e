#include "hce/wgmod.hpp"

#include <stdexcept>

namespace hce {

FreeWGModule::FreeWGModule(RingSpec spec, std::vector<BasisElt> basis)
    : spec_(spec), basis_(std::move(basis)) {
    for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
        if (basis_[i].weight < 0) throw std::invalid_argument("negative weight");
        auto [it, fresh] = by_name_.emplace(basis_[i].name, i);
        if (!fresh) throw std::invalid_argument("duplicate basis name: " + basis_[i].name);
    }
}

int FreeWGModule::index_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw std::out_of_range("no basis element named " + name);
    return it->second;
}

std::vector<int> FreeWGModule::block(int degree, int weight) const {
    std::vector<int> out;
    for (int i = 0; i < rank(); ++i)
        if (basis_[i].degree == degree && basis_[i].weight == weight) out.push_back(i);
    return out;
}

std::vector<std::pair<int, int>> FreeWGModule::blocks() const {
    std::map<std::pair<int, int>, bool> seen;
    for (const auto& b : basis_) seen[{b.degree, b.weight}] = true;
    std::vector<std::pair<int, int>> out;
    for (const auto& [k, _] : seen) out.push_back(k);
    return out;
}

void vec_add_term(const Ring& ring, Vec& v, int idx, const Scalar& c) {
    if (ring.is_zero(c)) return;
    auto it = v.find(idx);
    if (it == v.end()) {
        v.emplace(idx, c);
    } else {
        it->second = ring.add(it->second, c);
        if (ring.is_zero(it->second)) v.erase(it);
    }
}

Vec vec_scale(const Ring& ring, const Scalar& c, const Vec& v) {
    Vec out;
    if (ring.is_zero(c)) return out;
    for (const auto& [i, x] : v) {
        Scalar y = ring.mul(c, x);
        if (!ring.is_zero(y)) out.emplace(i, y);
    }
    return out;
}

Vec vec_add(const Ring& ring, const Vec& a, const Vec& b) {
    Vec out = a;
    for (const auto& [i, x] : b) vec_add_term(ring, out, i, x);
    return out;
}

WGMap::WGMap(FreeWGModule source, FreeWGModule target, int degree_shift)
    : source_(std::move(source)), target_(std::move(target)), degree_shift_(degree_shift),
      cols_(source_.rank()) {
    if (source_.spec() != target_.spec())
        throw std::invalid_argument("WGMap: ring spec mismatch between source and target");
}

void WGMap::set(int target_idx, int source_idx, const Scalar& c) {
    cols_[source_idx][target_idx] = c;
}

void WGMap::add(const Ring& ring, int target_idx, int source_idx, const Scalar& c) {
    vec_add_term(ring, cols_[source_idx], target_idx, c);
}

Vec WGMap::apply(const Ring& ring, const Vec& v) const {
    Vec out;
    for (const auto& [j, c] : v)
        for (const auto& [i, e] : cols_[j]) vec_add_term(ring, out, i, ring.mul(c, e));
    return out;
}

void WGMap::check_grading(const Ring& ring) const {
    for (int j = 0; j < source_.rank(); ++j)
        for (const auto& [i, c] : cols_[j]) {
            if (ring.is_zero(c)) continue;
            const auto& s = source_.elt(j);
            const auto& t = target_.elt(i);
            if (t.degree != s.degree + degree_shift_ || t.weight != s.weight)
                throw std::logic_error("WGMap entry violates grading: " + s.name + " -> " + t.name);
        }
}

Mat WGMap::block_matrix(const Ring& ring, const std::vector<int>& target_rows,
                        const std::vector<int>& source_cols) const {
    Mat M(static_cast<int>(target_rows.size()), static_cast<int>(source_cols.size()));
    for (auto& x : M.a) x = ring.zero();
    std::map<int, int> rowpos;
    for (int r = 0; r < static_cast<int>(target_rows.size()); ++r) rowpos[target_rows[r]] = r;
    for (int c = 0; c < static_cast<int>(source_cols.size()); ++c)
        for (const auto& [i, val] : cols_[source_cols[c]]) {
            auto it = rowpos.find(i);
            if (it != rowpos.end()) M.at(it->second, c) = val;
        }
    return M;
}

WGMap WGMap::compose(const Ring& ring, const WGMap& f, const WGMap& g) {
    WGMap h(g.source(), f.target(), f.degree_shift() + g.degree_shift());
    for (int j = 0; j < g.source().rank(); ++j) h.set_column(j, f.apply(ring, g.column(j)));
    return h;
}

bool WGMap::is_zero(const Ring& ring) const {
    for (const auto& col : cols_)
        for (const auto& [_, c] : col)
            if (!ring.is_zero(c)) return false;
    return true;
}

FreeWGModule tensor(const FreeWGModule& a, const FreeWGModule& b) {
    if (a.spec() != b.spec()) throw std::invalid_argument("tensor: ring spec mismatch");
    std::vector<BasisElt> basis;
    basis.reserve(static_cast<size_t>(a.rank()) * b.rank());
    for (const auto& x : a.basis())
        for (const auto& y : b.basis())
            basis.push_back({x.name + "*" + y.name, x.degree + y.degree, x.weight + y.weight});
    return FreeWGModule(a.spec(), std::move(basis));
}

int tensor_index(const FreeWGModule& a, const FreeWGModule& b, int i, int j) {
    (void)a;
    return i * b.rank() + j;
}

FreeWGModule dual_module(const FreeWGModule& m) {
    std::vector<BasisElt> basis;
    basis.reserve(m.rank());
    for (const auto& b : m.basis()) basis.push_back({b.name + "^", -b.degree, b.weight});
    return FreeWGModule(m.spec(), std::move(basis));
}

WGMap dualize(const Ring& ring, const WGMap& f) {
    WGMap g(dual_module(f.target()), dual_module(f.source()), -f.degree_shift());
    for (int j = 0; j < f.source().rank(); ++j)
        for (const auto& [i, c] : f.column(j)) {
            if (ring.is_zero(c)) continue;
            g.set(j, i, c);
        }
    return g;
}

}  // namespace hce
