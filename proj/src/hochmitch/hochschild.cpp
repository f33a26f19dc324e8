#include "hmcl/hochmitch/hochschild.hpp"

#include "hmcl/error.hpp"

#include <algorithm>

namespace hmcl {

std::vector<NerveSequence> nerve_sequences(const LinearCategory& c, std::size_t n)
{
    const std::size_t objs = c.object_count();
    std::vector<NerveSequence> out;
    NerveSequence cur;
    // Depth-first: choose x_1, then (x_2, c_1), (x_3, c_2), ...
    auto extend = [&](auto&& self) -> void {
        if (cur.morphisms.size() == n) {
            out.push_back(cur);
            return;
        }
        std::uint32_t from = cur.objects.back();
        for (std::uint32_t to = 0; to < objs; ++to)
            for (std::uint32_t i = 0; i < c.hom_dim(to, from); ++i) {
                cur.objects.push_back(to);
                cur.morphisms.push_back(i);
                self(self);
                cur.objects.pop_back();
                cur.morphisms.pop_back();
            }
    };
    for (std::uint32_t x = 0; x < objs; ++x) {
        cur.objects = {x};
        cur.morphisms.clear();
        extend(extend);
    }
    return out;
}

std::size_t nerve_dim(const LinearCategory& c, std::size_t n)
{
    if (n == 0) {
        std::size_t d = 0;
        for (std::size_t x = 0; x < c.object_count(); ++x)
            d += c.hom_dim(x, x);
        return d;
    }
    return nerve_sequences(c, n).size();
}

TensorBasis::TensorBasis(const Bimodule& m, std::size_t n, Direction direction)
    : degree_(n), direction_(direction), sequences_(nerve_sequences(m.base(), n))
{
    offsets_.push_back(0);
    for (std::size_t s = 0; s < sequences_.size(); ++s) {
        const auto& x = sequences_[s].objects;
        std::size_t d = direction == Direction::Chain ? m.dim(x.front(), x.back()) : m.dim(x.back(), x.front());
        lookup_.emplace(sequences_[s], s);
        offsets_.push_back(offsets_.back() + d);
    }
    size_ = offsets_.back();
}

std::size_t TensorBasis::sequence_index(const NerveSequence& s) const
{
    auto it = lookup_.find(s);
    if (it == lookup_.end())
        throw PreconditionError("sequence is not composable");
    return it->second;
}

std::size_t TensorBasis::sequence_of(std::size_t i) const
{
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), i);
    return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

std::vector<std::string> TensorBasis::labels(const Bimodule& m) const
{
    const LinearCategory& c = m.base();
    std::vector<std::string> out;
    out.reserve(size_);
    for (const auto& s : sequences_) {
        const auto& x = s.objects;
        std::string morphs;
        for (std::size_t k = s.morphisms.size(); k-- > 0;) {
            morphs += c.hom_labels(x[k + 1], x[k])[s.morphisms[k]];
            if (k)
                morphs += ", ";
        }
        if (s.morphisms.empty())
            morphs = c.object_name(x[0]);
        const auto& coeffs = direction_ == Direction::Chain ? m.labels(x.front(), x.back()) : m.labels(x.back(), x.front());
        for (const auto& l : coeffs)
            out.push_back(direction_ == Direction::Chain ? "(" + l + "; " + morphs + ")" : "[" + morphs + " -> " + l + "]");
    }
    return out;
}

namespace {

NerveSequence drop_last(const NerveSequence& s)
{
    return {{s.objects.begin(), s.objects.end() - 1}, {s.morphisms.begin(), s.morphisms.end() - 1}};
}

NerveSequence drop_first(const NerveSequence& s)
{
    return {{s.objects.begin() + 1, s.objects.end()}, {s.morphisms.begin() + 1, s.morphisms.end()}};
}

// Replace c_k, c_{k+1} (0-based positions k-1, k) by basis morphism l.
NerveSequence merge(const NerveSequence& s, std::size_t k, std::uint32_t l)
{
    NerveSequence r;
    r.objects = s.objects;
    r.objects.erase(r.objects.begin() + static_cast<std::ptrdiff_t>(k));
    r.morphisms = s.morphisms;
    r.morphisms.erase(r.morphisms.begin() + static_cast<std::ptrdiff_t>(k));
    r.morphisms[k - 1] = l;
    return r;
}

Scalar signed_value(const Field& f, bool negative, const Scalar& v)
{
    return negative ? f.neg(v) : v;
}

} // namespace

HochschildComplex chain_complex(const Bimodule& m, std::size_t max_degree)
{
    const LinearCategory& c = m.base();
    const Field& f = m.field();
    HochschildComplex hc;
    BasedComplex& cx = hc.complex;
    cx.direction = Direction::Chain;
    cx.field = f;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        hc.bases.emplace_back(m, n, Direction::Chain);
        cx.dims.push_back(hc.bases.back().size());
        cx.labels.push_back(hc.bases.back().labels(m));
    }
    cx.differentials.push_back(Matrix(f, 0, cx.dims[0]));
    for (std::size_t n = 1; n <= max_degree; ++n) {
        const TensorBasis& src = hc.bases[n];
        const TensorBasis& dst = hc.bases[n - 1];
        MatrixBuilder b(f, dst.size(), src.size());
        for (std::size_t s = 0; s < src.sequences().size(); ++s) {
            const NerveSequence& seq = src.sequences()[s];
            const auto& x = seq.objects;
            const auto& cm = seq.morphisms;
            // (m c_n; c_{n-1}, ..., c_1)
            Matrix right_t = m.right(x[0], x[n], x[n - 1], cm[n - 1]).transpose();
            std::size_t first = dst.offset(dst.sequence_index(drop_last(seq)));
            // (-1)^n (c_1 m; c_n, ..., c_2)
            Matrix left_t = m.left(x[1], x[0], x[n], cm[0]).transpose();
            std::size_t last = dst.offset(dst.sequence_index(drop_first(seq)));
            for (std::size_t k = 0; k < src.coefficient_dim(s); ++k) {
                std::size_t col = src.offset(s) + k;
                for (const auto& e : right_t.row(k))
                    b.add(first + e.col, col, e.value);
                for (const auto& e : left_t.row(k))
                    b.add(last + e.col, col, signed_value(f, n % 2 == 1, e.value));
            }
            // (-1)^{n-k} (m; ..., c_{k+1} c_k, ...) for k = 1..n-1
            for (std::size_t k = 1; k < n; ++k) {
                const Vector& p = c.product(x[k + 1], x[k], x[k - 1], cm[k], cm[k - 1]);
                for (std::uint32_t l = 0; l < p.size(); ++l) {
                    if (sgn(p[l]) == 0)
                        continue;
                    std::size_t target = dst.offset(dst.sequence_index(merge(seq, k, l)));
                    Scalar v = signed_value(f, (n - k) % 2 == 1, p[l]);
                    for (std::size_t q = 0; q < src.coefficient_dim(s); ++q)
                        b.add(target + q, src.offset(s) + q, v);
                }
            }
        }
        cx.differentials.push_back(std::move(b).build());
    }
    cx.validate();
    return hc;
}

HochschildComplex cochain_complex(const Bimodule& m, std::size_t max_degree)
{
    const LinearCategory& c = m.base();
    const Field& f = m.field();
    HochschildComplex hc;
    BasedComplex& cx = hc.complex;
    cx.direction = Direction::Cochain;
    cx.field = f;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        hc.bases.emplace_back(m, n, Direction::Cochain);
        cx.dims.push_back(hc.bases.back().size());
        cx.labels.push_back(hc.bases.back().labels(m));
    }
    for (std::size_t n = 0; n < max_degree; ++n) {
        const TensorBasis& src = hc.bases[n];
        const TensorBasis& dst = hc.bases[n + 1];
        MatrixBuilder b(f, dst.size(), src.size());
        for (std::size_t t = 0; t < dst.sequences().size(); ++t) {
            const NerveSequence& seq = dst.sequences()[t];
            const auto& x = seq.objects; // x[0..n+1]
            const auto& cm = seq.morphisms; // cm[0..n]
            std::size_t row0 = dst.offset(t);
            // (-1)^{n+1} c_{n+1} f(c_n, ..., c_1)
            {
                const Matrix& l = m.left(x[n + 1], x[n], x[0], cm[n]);
                std::size_t col0 = src.offset(src.sequence_index(drop_last(seq)));
                for (std::size_t r = 0; r < l.rows(); ++r)
                    for (const auto& e : l.row(r))
                        b.add(row0 + r, col0 + e.col, signed_value(f, (n + 1) % 2 == 1, e.value));
            }
            // (-1)^i f(..., c_{i+1} c_i, ...)
            for (std::size_t i = 1; i <= n; ++i) {
                const Vector& p = c.product(x[i + 1], x[i], x[i - 1], cm[i], cm[i - 1]);
                for (std::uint32_t l = 0; l < p.size(); ++l) {
                    if (sgn(p[l]) == 0)
                        continue;
                    std::size_t col0 = src.offset(src.sequence_index(merge(seq, i, l)));
                    Scalar v = signed_value(f, i % 2 == 1, p[l]);
                    for (std::size_t q = 0; q < dst.coefficient_dim(t); ++q)
                        b.add(row0 + q, col0 + q, v);
                }
            }
            // f(c_{n+1}, ..., c_2) c_1
            {
                const Matrix& r = m.right(x[n + 1], x[1], x[0], cm[0]);
                std::size_t col0 = src.offset(src.sequence_index(drop_first(seq)));
                for (std::size_t q = 0; q < r.rows(); ++q)
                    for (const auto& e : r.row(q))
                        b.add(row0 + q, col0 + e.col, e.value);
            }
        }
        cx.differentials.push_back(std::move(b).build());
    }
    cx.validate();
    return hc;
}

std::vector<std::size_t> hochschild_homology_dims(const Bimodule& m, std::size_t max_degree)
{
    return homology(chain_complex(m, max_degree + 1).complex).dims();
}

std::vector<std::size_t> hochschild_cohomology_dims(const Bimodule& m, std::size_t max_degree)
{
    return homology(cochain_complex(m, max_degree + 1).complex).dims();
}

CenterResult center(const LinearCategory& c)
{
    const std::size_t n = c.object_count();
    const Field& f = c.field();
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t x = 0; x < n; ++x)
        offset[x + 1] = offset[x] + c.hom_dim(x, x);
    std::size_t rows = 0;
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            rows += c.hom_dim(y, x) * c.hom_dim(y, x);
    MatrixBuilder b(f, rows, offset[n]);
    std::size_t row = 0;
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t g = 0; g < c.hom_dim(y, x); ++g) {
                // g m_x - m_y g = 0, one row per coordinate of hom(y, x)
                for (std::size_t k = 0; k < c.hom_dim(x, x); ++k) {
                    const Vector& p = c.product(y, x, x, g, k);
                    for (std::size_t r = 0; r < p.size(); ++r)
                        if (sgn(p[r]) != 0)
                            b.add(row + r, offset[x] + k, p[r]);
                }
                for (std::size_t k = 0; k < c.hom_dim(y, y); ++k) {
                    const Vector& p = c.product(y, y, x, k, g);
                    for (std::size_t r = 0; r < p.size(); ++r)
                        if (sgn(p[r]) != 0)
                            b.add(row + r, offset[y] + k, f.neg(p[r]));
                }
                row += c.hom_dim(y, x);
            }
    Subspace z = kernel_basis(std::move(b).build());
    return {z.dim(), z.basis()};
}

BasedComplex algebra_hochschild_cochain(const FlatAlgebra& a, const Bimodule& m, std::size_t max_degree,
                                        std::size_t size_cap)
{
    const LinearCategory& c = m.base();
    const std::size_t objs = c.object_count(), d = a.dim();
    const Field& f = m.field();
    if (a.tags.size() != d || d != c.total_dim())
        throw PreconditionError("algebra is not the flattening of the bimodule's base category");
    // Bimodule total space, blocks M(y, x) in (y, x) order.
    std::vector<std::size_t> mo(objs * objs + 1, 0);
    for (std::size_t i = 0; i < objs * objs; ++i)
        mo[i + 1] = mo[i] + m.dim(i / objs, i % objs);
    const std::size_t dm = mo.back();

    std::size_t biggest = dm;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        if (n > 0) {
            if (biggest > size_cap / std::max<std::size_t>(d, 1))
                throw PreconditionError("algebra cochain space exceeds the size cap of " + std::to_string(size_cap));
            biggest *= d;
        }
    }

    // Action of each algebra basis element on the total space.
    std::vector<Matrix> left, right;
    for (std::size_t k = 0; k < d; ++k) {
        auto [ty, tx] = a.tags[k];
        std::size_t local = 0;
        while (local < k && a.tags[k - local - 1] == a.tags[k])
            ++local;
        MatrixBuilder lb(f, dm, dm), rb(f, dm, dm);
        for (std::size_t x = 0; x < objs; ++x) {
            // basis k in hom(ty, tx): M(tx, x) -> M(ty, x)
            const Matrix& l = m.left(ty, tx, x, local);
            for (std::size_t r = 0; r < l.rows(); ++r)
                for (const auto& e : l.row(r))
                    lb.add(mo[ty * objs + x] + r, mo[tx * objs + x] + e.col, e.value);
            // basis k in hom(ty, tx) on the right: M(x, ty) -> M(x, tx)
            const Matrix& rr = m.right(x, ty, tx, local);
            for (std::size_t r = 0; r < rr.rows(); ++r)
                for (const auto& e : rr.row(r))
                    rb.add(mo[x * objs + tx] + r, mo[x * objs + ty] + e.col, e.value);
        }
        left.push_back(std::move(lb).build());
        right.push_back(std::move(rb).build());
    }

    BasedComplex cx;
    cx.direction = Direction::Cochain;
    cx.field = f;
    std::size_t tuples = 1;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        cx.dims.push_back(tuples * dm);
        tuples *= d;
    }
    tuples = 1;
    for (std::size_t n = 0; n < max_degree; ++n, tuples *= d) {
        // (df)(a_1, ..., a_{n+1}) = a_1 f(a_2, ...) + sum (-1)^i f(..., a_i a_{i+1}, ...)
        //   + (-1)^{n+1} f(a_1, ..., a_n) a_{n+1}
        MatrixBuilder b(f, cx.dims[n + 1], cx.dims[n]);
        std::vector<std::size_t> digits(n + 1);
        for (std::size_t tau = 0; tau < tuples * d; ++tau) {
            std::size_t rest = tau;
            for (std::size_t i = n + 1; i-- > 0;) {
                digits[i] = rest % d;
                rest /= d;
            }
            auto encode = [&](const std::vector<std::size_t>& ds) {
                std::size_t v = 0;
                for (auto x : ds)
                    v = v * d + x;
                return v;
            };
            std::size_t row0 = tau * dm;
            std::vector<std::size_t> tail(digits.begin() + 1, digits.end());
            std::size_t s1 = encode(tail) * dm;
            for (std::size_t r = 0; r < dm; ++r)
                for (const auto& e : left[digits[0]].row(r))
                    b.add(row0 + r, s1 + e.col, e.value);
            for (std::size_t i = 0; i < n; ++i) {
                const Vector& p = a.products[digits[i] * d + digits[i + 1]];
                for (std::size_t l = 0; l < d; ++l) {
                    if (sgn(p[l]) == 0)
                        continue;
                    std::vector<std::size_t> merged(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(i));
                    merged.push_back(l);
                    merged.insert(merged.end(), digits.begin() + static_cast<std::ptrdiff_t>(i + 2), digits.end());
                    std::size_t s = encode(merged) * dm;
                    Scalar v = signed_value(f, (i + 1) % 2 == 1, p[l]);
                    for (std::size_t q = 0; q < dm; ++q)
                        b.add(row0 + q, s + q, v);
                }
            }
            std::vector<std::size_t> head(digits.begin(), digits.end() - 1);
            std::size_t s2 = encode(head) * dm;
            for (std::size_t r = 0; r < dm; ++r)
                for (const auto& e : right[digits[n]].row(r))
                    b.add(row0 + r, s2 + e.col, signed_value(f, (n + 1) % 2 == 1, e.value));
        }
        cx.differentials.push_back(std::move(b).build());
    }
    cx.validate();
    return cx;
}

} // namespace hmcl
