#include "hmcl/hochmitch/complex.hpp"

#include "hmcl/error.hpp"

namespace hmcl {

const Matrix* BasedComplex::outgoing(std::size_t n) const
{
    if (direction == Direction::Chain)
        return n <= top() && n < differentials.size() ? &differentials[n] : nullptr;
    return n < top() && n < differentials.size() ? &differentials[n] : nullptr;
}

std::optional<Matrix> BasedComplex::incoming(std::size_t n) const
{
    if (direction == Direction::Chain) {
        if (n + 1 <= top() && n + 1 < differentials.size())
            return differentials[n + 1];
        return std::nullopt;
    }
    if (n == 0)
        return Matrix(field, dims.empty() ? 0 : dims[0], 0);
    if (n <= top() && n - 1 < differentials.size())
        return differentials[n - 1];
    return std::nullopt;
}

void BasedComplex::validate() const
{
    const std::size_t N = top();
    if (dims.empty())
        throw InvariantError("complex without degrees");
    if (!labels.empty()) {
        if (labels.size() != dims.size())
            throw InvariantError("complex labels do not cover every degree");
        for (std::size_t n = 0; n <= N; ++n)
            if (labels[n].size() != dims[n])
                throw InvariantError("wrong number of labels in degree " + std::to_string(n));
    }
    if (direction == Direction::Chain) {
        if (differentials.size() != N + 1)
            throw InvariantError("chain complex needs d_0..d_N");
        for (std::size_t n = 0; n <= N; ++n) {
            const Matrix& d = differentials[n];
            if (d.cols() != dims[n] || d.rows() != (n == 0 ? 0 : dims[n - 1]))
                throw InvariantError("d_" + std::to_string(n) + " has wrong shape");
            if (n >= 2 && !(differentials[n - 1] * d).is_zero())
                throw InvariantError("d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " != 0");
        }
    } else {
        if (differentials.size() != N)
            throw InvariantError("cochain complex needs d^0..d^(N-1)");
        for (std::size_t n = 0; n < N; ++n) {
            const Matrix& d = differentials[n];
            if (d.cols() != dims[n] || d.rows() != dims[n + 1])
                throw InvariantError("d^" + std::to_string(n) + " has wrong shape");
            if (n >= 1 && !(d * differentials[n - 1]).is_zero())
                throw InvariantError("d^" + std::to_string(n) + " d^" + std::to_string(n - 1) + " != 0");
        }
    }
}

DegreeHomology degree_homology(const BasedComplex& c, std::size_t n)
{
    const Matrix* out = c.outgoing(n);
    auto in = c.incoming(n);
    if (!out || !in)
        throw PreconditionError("homology in degree " + std::to_string(n) + " needs the complex through degree " +
                                std::to_string(n + 1));
    DegreeHomology h;
    h.degree = n;
    h.cycles = kernel_basis(*out);
    h.boundaries = image_basis(*in);
    if (!h.cycles.contains(h.boundaries))
        throw InvariantError("boundaries are not cycles in degree " + std::to_string(n));
    h.modulo_boundaries_.emplace(h.boundaries);
    const QuotientMap& q = *h.modulo_boundaries_;
    // Cycle basis rows independent modulo boundaries, greedily in order.
    Matrix projected = (q.matrix() * h.cycles.basis().transpose());
    EchelonForm e = row_echelon(projected);
    std::vector<std::size_t> chosen = e.pivots;
    h.dim = chosen.size();
    h.representatives = h.cycles.basis().select_rows(chosen);
    h.projected_reps_ = projected.select_cols(chosen);
    return h;
}

Vector DegreeHomology::class_of(const Vector& v) const
{
    if (!cycles.contains(v))
        throw PreconditionError("class_of: vector is not a cycle");
    auto x = solve(projected_reps_, modulo_boundaries_->project(v));
    if (!x)
        throw InvariantError("class_of: cycle is not a combination of representatives");
    return *x;
}

std::vector<std::size_t> HomologyResult::dims() const
{
    std::vector<std::size_t> out;
    for (const auto& d : degrees)
        out.push_back(d.dim);
    return out;
}

HomologyResult homology(const BasedComplex& c)
{
    HomologyResult r;
    r.direction = c.direction;
    for (std::size_t n = 0; n < c.top(); ++n)
        r.degrees.push_back(degree_homology(c, n));
    return r;
}

} // namespace hmcl
