#include "ramsum/hyperdet.hpp"

#include <algorithm>
#include <numeric>

#include "ramsum/errors.hpp"
#include "ramsum/fourier.hpp"

namespace ramsum {

namespace {

std::size_t entry_count(std::size_t dim, std::size_t order) {
    if (dim == 0) throw precondition_error("hypermatrix dimension must be positive");
    if (order == 0) throw precondition_error("hypermatrix order must be positive");
    auto count = checked_pow(static_cast<std::int64_t>(order), static_cast<std::int64_t>(dim));
    if (!count || *count > 50'000'000) throw resource_error("hypermatrix has too many entries");
    return static_cast<std::size_t>(*count);
}

void require_permutation(std::span<const std::size_t> p, std::size_t size, const char* what) {
    if (p.size() != size) throw precondition_error(std::string(what) + ": permutation has the wrong length");
    std::vector<bool> seen(size + 1, false);
    for (auto x : p) {
        if (x < 1 || x > size || seen[x]) throw precondition_error(std::string(what) + ": not a permutation");
        seen[x] = true;
    }
}

}  // namespace

Hypermatrix::Hypermatrix(std::size_t dim, std::size_t order)
    : dim_(dim), order_(order), entries_(entry_count(dim, order), Rat(0)) {}

Hypermatrix::Hypermatrix(std::size_t dim, std::size_t order, std::vector<Rat> entries)
    : dim_(dim), order_(order), entries_(std::move(entries)) {
    if (entries_.size() != entry_count(dim, order)) {
        throw precondition_error("hypermatrix needs exactly order^dim entries");
    }
}

Hypermatrix Hypermatrix::generate(std::size_t dim, std::size_t order,
                                  const std::function<Rat(std::span<const std::size_t>)>& f) {
    Hypermatrix out(dim, order);
    for (std::size_t o = 0; o < out.entries_.size(); ++o) out.entries_[o] = f(out.index_of(o));
    return out;
}

std::size_t Hypermatrix::offset(std::span<const std::size_t> index) const {
    if (index.size() != dim_) throw arity_error("index length does not match hypermatrix dimension");
    std::size_t o = 0;
    for (auto i : index) {
        if (i < 1 || i > order_) throw precondition_error("hypermatrix index out of range");
        o = o * order_ + (i - 1);
    }
    return o;
}

std::vector<std::size_t> Hypermatrix::index_of(std::size_t offset) const {
    std::vector<std::size_t> index(dim_);
    for (std::size_t a = dim_; a-- > 0;) {
        index[a] = offset % order_ + 1;
        offset /= order_;
    }
    return index;
}

namespace {

struct Permutation {
    std::vector<std::size_t> images;  // 0-based
    int sign;
};

std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::vector<Permutation> out;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j] ? 1 : 0;
        }
        out.push_back({p, inversions % 2 == 0 ? 1 : -1});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::uint64_t factorial_power(std::size_t n, std::size_t exponent, std::uint64_t ceiling) {
    std::uint64_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        fact *= i;
        if (fact > ceiling) return ceiling + 1;
    }
    std::uint64_t total = 1;
    for (std::size_t e = 0; e < exponent; ++e) {
        total *= fact;
        if (total > ceiling) return ceiling + 1;
    }
    return total;
}

// Sum over s_2..s_k of prod_{j in I} sgn(s_j) prod_v A(v, s_2(v), ..., s_k(v)).
class PermutationSum {
public:
    PermutationSum(const Hypermatrix& a, const Signature& signature)
        : a_(a), perms_(all_permutations(a.order())), offsets_(a.dim(), std::vector<std::size_t>(a.order())) {
        const std::size_t n = a.order();
        stride_.assign(a.dim(), 1);
        for (std::size_t j = a.dim() - 1; j-- > 0;) stride_[j] = stride_[j + 1] * n;
        signed_.assign(a.dim(), false);
        for (auto axis : signature) signed_[axis - 1] = true;
        for (std::size_t v = 0; v < n; ++v) offsets_[0][v] = v * stride_[0];
    }

    Rat run() {
        walk(1, 1);
        return total_;
    }

private:
    void walk(std::size_t axis, int sign) {
        const std::size_t n = a_.order();
        if (axis == a_.dim()) {
            Rat term = a_.entries()[offsets_[axis - 1][0]];
            for (std::size_t v = 1; v < n && term != 0; ++v) term *= a_.entries()[offsets_[axis - 1][v]];
            if (sign > 0) {
                total_ += term;
            } else {
                total_ -= term;
            }
            return;
        }
        for (const auto& p : perms_) {
            for (std::size_t v = 0; v < n; ++v) offsets_[axis][v] = offsets_[axis - 1][v] + p.images[v] * stride_[axis];
            walk(axis + 1, signed_[axis] ? sign * p.sign : sign);
        }
    }

    const Hypermatrix& a_;
    std::vector<Permutation> perms_;
    std::vector<std::size_t> stride_;
    std::vector<bool> signed_;
    std::vector<std::vector<std::size_t>> offsets_;
    Rat total_ = 0;
};

void require_signature(const Signature& signature, std::size_t dim) {
    for (auto axis : signature) {
        if (axis < 1 || axis > dim) throw precondition_error("signature axis outside 1..dim");
    }
}

}  // namespace

Rat hyperdet(const Hypermatrix& a, const Signature& signature, std::uint64_t ceiling) {
    require_signature(signature, a.dim());
    const std::size_t n = a.order();
    if (signature.size() % 2 == 1 && n >= 2) return 0;
    if (factorial_power(n, a.dim() - 1, ceiling) > ceiling) {
        throw resource_error("hyperdeterminant needs (n!)^(k-1) > " + std::to_string(ceiling) + " permutation tuples");
    }
    return PermutationSum(a, signature).run();
}

Rat matrix_determinant(const Hypermatrix& a) {
    if (a.dim() != 2) throw arity_error("ordinary determinant needs a 2-dimensional matrix");
    const std::size_t n = a.order();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a.entries()[i * n + j];
    }
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rat factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

Hypermatrix cayley_product(const Hypermatrix& a, const Hypermatrix& b) {
    if (a.order() != b.order()) throw precondition_error("Cayley product needs equal orders");
    const std::size_t k = a.dim();
    const std::size_t l = b.dim();
    if (k + l < 3) throw arity_error("Cayley product needs dim(A) + dim(B) >= 3");
    const std::size_t n = a.order();
    return Hypermatrix::generate(k + l - 2, n, [&](std::span<const std::size_t> idx) {
        std::vector<std::size_t> ia(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k - 1));
        ia.push_back(0);
        std::vector<std::size_t> ib{0};
        ib.insert(ib.end(), idx.begin() + static_cast<std::ptrdiff_t>(k - 1), idx.end());
        Rat sum = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            ia.back() = j;
            ib.front() = j;
            sum += a.at(ia) * b.at(ib);
        }
        return sum;
    });
}

namespace {

void require_ac(const Hypermatrix& a, const Hypermatrix& c, std::size_t l) {
    if (c.dim() != 2) throw arity_error("C must be 2-dimensional");
    if (a.order() != c.order()) throw precondition_error("A and C need equal orders");
    if (l > a.dim()) throw precondition_error("iteration count l must satisfy 0 <= l <= k");
}

}  // namespace

Hypermatrix iterate_AC(const Hypermatrix& a, const Hypermatrix& c, std::size_t l) {
    require_ac(a, c, l);
    Hypermatrix current = a;
    const std::size_t k = a.dim();
    for (std::size_t step = 0; step < l; ++step) {
        const Hypermatrix product = cayley_product(current, c);
        current = Hypermatrix::generate(k, a.order(), [&](std::span<const std::size_t> idx) {
            std::vector<std::size_t> cycled(idx.begin() + 1, idx.end());
            cycled.push_back(idx[0]);
            return product.at(cycled);
        });
    }
    return current;
}

Hypermatrix iterate_AC_closed(const Hypermatrix& a, const Hypermatrix& c, std::size_t l) {
    require_ac(a, c, l);
    const std::size_t k = a.dim();
    const std::size_t n = a.order();
    return Hypermatrix::generate(k, n, [&](std::span<const std::size_t> idx) {
        std::vector<std::size_t> ia(idx.begin() + static_cast<std::ptrdiff_t>(l), idx.end());
        ia.resize(k, 1);
        std::vector<std::size_t> js(l, 1);
        Rat sum = 0;
        while (true) {
            for (std::size_t h = 0; h < l; ++h) ia[k - l + h] = js[h];
            Rat term = a.at(ia);
            for (std::size_t h = 0; h < l && term != 0; ++h) {
                const std::size_t pair[2] = {js[h], idx[h]};
                term *= c.at(pair);
            }
            sum += term;
            std::size_t h = l;
            while (h > 0 && js[h - 1] == n) js[--h] = 1;
            if (h == 0) break;
            ++js[h - 1];
        }
        return sum;
    });
}

Hypermatrix permute_order(const Hypermatrix& a, std::span<const std::size_t> p) {
    require_permutation(p, a.order(), "permute_order");
    return Hypermatrix::generate(a.dim(), a.order(), [&](std::span<const std::size_t> idx) {
        std::vector<std::size_t> mapped(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) mapped[i] = p[idx[i] - 1];
        return a.at(mapped);
    });
}

Hypermatrix permute_axes(const Hypermatrix& a, std::span<const std::size_t> p) {
    require_permutation(p, a.dim(), "permute_axes");
    return Hypermatrix::generate(a.dim(), a.order(), [&](std::span<const std::size_t> idx) {
        std::vector<std::size_t> mapped(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) mapped[i] = idx[p[i] - 1];
        return a.at(mapped);
    });
}

Signature preimage(const Signature& signature, std::span<const std::size_t> p) {
    require_permutation(p, p.size(), "preimage");
    Signature out;
    for (std::size_t a = 1; a <= p.size(); ++a) {
        if (signature.count(p[a - 1])) out.insert(a);
    }
    return out;
}

namespace {

std::vector<std::int64_t> sorted_distinct(std::span<const std::int64_t> xs) {
    std::vector<std::int64_t> out(xs.begin(), xs.end());
    std::sort(out.begin(), out.end());
    for (auto x : out) {
        if (x < 1) throw precondition_error("set elements must be positive");
    }
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw precondition_error("set elements must be distinct");
    }
    return out;
}

bool closed_sorted(const std::vector<std::int64_t>& xs) {
    for (auto x : xs) {
        for (auto d : divisors(x)) {
            if (!std::binary_search(xs.begin(), xs.end(), d)) return false;
        }
    }
    return true;
}

}  // namespace

FactorClosedSet::FactorClosedSet(std::vector<std::int64_t> xs) : xs_(sorted_distinct(xs)) {
    if (xs_.empty()) throw precondition_error("factor-closed set must be nonempty");
    if (!closed_sorted(xs_)) throw precondition_error("set not factor-closed");
}

bool is_factor_closed(std::span<const std::int64_t> xs) { return closed_sorted(sorted_distinct(xs)); }

FactorClosedSet factor_closure(std::span<const std::int64_t> xs) {
    std::set<std::int64_t> closure;
    for (auto x : sorted_distinct(xs)) {
        const auto& ds = divisors(x);
        closure.insert(ds.begin(), ds.end());
    }
    return FactorClosedSet({closure.begin(), closure.end()});
}

Hypermatrix build_S_hypermatrix(const MultiSumSpec& spec, const FactorClosedSet& s) {
    spec.validate();
    const auto& xs = s.elements();
    return Hypermatrix::generate(spec.m() + 1, s.size(), [&](std::span<const std::size_t> idx) {
        std::vector<std::int64_t> args(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) args[i] = xs[idx[i] - 1];
        return eval(spec, args);
    });
}

Signature smith_signature(std::size_t m) {
    Signature out;
    for (std::size_t j = m % 2 == 0 ? 2 : 1; j <= m + 1; ++j) out.insert(j);
    return out;
}

std::pair<Rat, Rat> smith_hyperdet_check(const MultiSumSpec& spec, const FactorClosedSet& s,
                                         const std::optional<Signature>& signature) {
    spec.validate();
    const std::size_t m = spec.m();
    const Signature expected = smith_signature(m);
    if (signature && *signature != expected) {
        throw precondition_error("the determinant identity for S fixes the signature by the parity of m");
    }
    Rat lhs = hyperdet(build_S_hypermatrix(spec, s), expected);

    Rat unit_values = 1;
    for (std::size_t j = 0; j < m; ++j) unit_values *= spec.fns[j](1);
    const std::int64_t gamma = m == 0 ? 1 : lcm_many(spec.gammas);
    const ArithFn last = restrict_gamma(spec.fns[m], gamma);
    Rat rhs = 1;
    for (auto x : s.elements()) {
        rhs *= unit_values * last(x);
        if (spec.weight) rhs *= (*spec.weight)(std::vector<std::int64_t>(m, x));
    }
    return {lhs, rhs};
}

Signature reduced_signature(std::span<const std::size_t> ks, const Signature& signature) {
    Signature out;
    for (std::size_t j = 1; j <= ks.size(); ++j) {
        if ((signature.count(j) + ks[j - 1]) % 2 == 1) out.insert(j);
    }
    return out;
}

std::pair<Rat, Rat> even_hyperdet_check(const BlockEvenFn& f, std::span<const std::size_t> ks,
                                        const FactorClosedSet& s, const Signature& signature) {
    const std::size_t m = ks.size();
    if (m == 0) throw arity_error("block-even identity needs at least one block");
    const std::size_t total = std::accumulate(ks.begin(), ks.end(), std::size_t{0});
    const std::size_t dim = m + total;
    require_signature(signature, dim);
    for (std::size_t j = m + 1; j <= dim; ++j) {
        if (!signature.count(j)) throw precondition_error("signature must contain every variable axis m+1..m+|k|");
    }
    if (signature.size() % 2 == 1) throw precondition_error("signature must have even cardinality");

    const auto& xs = s.elements();
    const std::size_t n = s.size();
    auto moduli_of = [&](std::span<const std::size_t> idx) {
        std::vector<std::int64_t> r(m);
        for (std::size_t j = 0; j < m; ++j) r[j] = xs[idx[j] - 1];
        return r;
    };

    // Evenness for every modulus tuple that occurs, then the coefficient
    // hypermatrix alpha(i_1..i_m) at the repeated diagonal argument.
    Hypermatrix alpha = Hypermatrix::generate(m, n, [&](std::span<const std::size_t> idx) {
        const auto r = moduli_of(idx);
        MultiFn bound = [&f, r](std::span<const std::int64_t> args) { return f(r, args); };
        require_even(bound, r, ks);
        std::vector<std::int64_t> ds;
        for (std::size_t j = 0; j < m; ++j) ds.insert(ds.end(), ks[j], r[j]);
        return general_even_coeff_at(bound, r, ks, ds);
    });

    Hypermatrix b = Hypermatrix::generate(dim, n, [&](std::span<const std::size_t> idx) {
        std::vector<std::int64_t> args(total);
        for (std::size_t i = 0; i < total; ++i) args[i] = xs[idx[m + i] - 1];
        return f(moduli_of(idx), args);
    });

    Rat lhs = hyperdet(b, signature);
    Rat product = 1;
    for (auto x : xs) product *= Rat(static_cast<long>(x));
    Rat scale = 1;
    for (std::size_t i = 0; i < total; ++i) scale *= product;
    Rat rhs = scale * hyperdet(alpha, reduced_signature(ks, signature));
    return {lhs, rhs};
}

}  // namespace ramsum
