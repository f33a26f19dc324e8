#include "hmcl/lincat/algebra.hpp"

#include "hmcl/error.hpp"
#include "hmcl/exactlin/subspace.hpp"

#include <algorithm>
#include <set>

namespace hmcl {

Vector FlatAlgebra::multiply(const Vector& a, const Vector& b) const
{
    const std::size_t d = dim();
    if (a.size() != d || b.size() != d)
        throw PreconditionError("algebra element has wrong length");
    Vector out(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (sgn(b[j]) == 0)
                continue;
            const Vector& p = products[i * d + j];
            Scalar s = field.mul(a[i], b[j]);
            for (std::size_t k = 0; k < d; ++k)
                if (sgn(p[k]) != 0)
                    out[k] = field.add(out[k], field.mul(s, p[k]));
        }
    }
    return out;
}

Vector FlatAlgebra::unit() const
{
    Vector u(dim());
    for (const auto& e : idempotents)
        for (std::size_t k = 0; k < dim(); ++k)
            u[k] = field.add(u[k], e[k]);
    return u;
}

void FlatAlgebra::validate() const
{
    const std::size_t d = dim();
    if (products.size() != d * d)
        throw InvariantError("multiplication table has wrong size");
    for (const auto& p : products)
        if (p.size() != d)
            throw InvariantError("product vector has wrong length");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vector ek(d), ei(d);
                ek[k] = 1;
                ei[i] = 1;
                if (multiply(products[i * d + j], ek) != multiply(ei, products[j * d + k]))
                    throw InvariantError("algebra is not associative on (" + labels[i] + ", " + labels[j] + ", " +
                                         labels[k] + ")");
            }
}

void FlatAlgebra::check_idempotents() const
{
    const std::size_t d = dim();
    if (idempotents.size() != idempotent_names.size())
        throw PreconditionError("every idempotent needs a name");
    for (std::size_t i = 0; i < idempotents.size(); ++i) {
        const Vector& e = idempotents[i];
        if (e.size() != d)
            throw PreconditionError("idempotent " + idempotent_names[i] + " has wrong length");
        if (is_zero(e))
            throw PreconditionError("idempotent " + idempotent_names[i] + " is zero");
        for (std::size_t j = 0; j < idempotents.size(); ++j) {
            Vector p = multiply(e, idempotents[j]);
            if (i == j ? p != e : !is_zero(p))
                throw PreconditionError("idempotents " + idempotent_names[i] + ", " + idempotent_names[j] +
                                        " are not orthogonal idempotents");
        }
    }
    Vector u = unit();
    for (std::size_t k = 0; k < d; ++k) {
        Vector ek(d);
        ek[k] = 1;
        if (multiply(u, ek) != ek || multiply(ek, u) != ek)
            throw PreconditionError("idempotents do not sum to the unit");
    }
}

FlatAlgebra flatten_to_algebra(const LinearCategory& c)
{
    const std::size_t n = c.object_count();
    FlatAlgebra a;
    a.field = c.field();
    std::vector<std::size_t> offset(n * n);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x) {
            offset[y * n + x] = a.labels.size();
            for (const auto& label : c.hom_labels(y, x)) {
                a.labels.push_back(label);
                a.tags.emplace_back(y, x);
            }
        }
    const std::size_t d = a.dim();
    a.products.assign(d * d, Vector(d));
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t i = 0; i < c.hom_dim(z, y); ++i)
                    for (std::size_t j = 0; j < c.hom_dim(y, x); ++j) {
                        const Vector& p = c.product(z, y, x, i, j);
                        Vector& slot = a.products[(offset[z * n + y] + i) * d + offset[y * n + x] + j];
                        for (std::size_t k = 0; k < p.size(); ++k)
                            slot[offset[z * n + x] + k] = p[k];
                    }
    for (std::size_t x = 0; x < n; ++x) {
        Vector e(d);
        for (std::size_t k = 0; k < c.hom_dim(x, x); ++k)
            e[offset[x * n + x] + k] = c.identity(x)[k];
        a.idempotents.push_back(std::move(e));
        a.idempotent_names.push_back(c.object_name(x));
    }
    return a;
}

namespace {

std::string combination_label(const FlatAlgebra& a, const Vector& v)
{
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (sgn(v[k]) != 0)
            support.push_back(k);
    if (support.size() == 1 && v[support[0]] == 1)
        return a.labels[support[0]];
    std::string out;
    for (auto k : support) {
        if (!out.empty())
            out += " + ";
        if (v[k] != 1)
            out += to_string(v[k]) + " ";
        out += a.labels[k];
    }
    return out;
}

} // namespace

LinearCategory category_from_algebra(const FlatAlgebra& a)
{
    a.check_idempotents();
    const std::size_t n = a.idempotents.size(), d = a.dim();
    std::vector<Subspace> homs;
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x) {
            std::vector<Vector> gens;
            for (std::size_t k = 0; k < d; ++k) {
                Vector ek(d);
                ek[k] = 1;
                Vector g = a.multiply(a.multiply(a.idempotents[y], ek), a.idempotents[x]);
                if (!is_zero(g))
                    gens.push_back(std::move(g));
            }
            homs.emplace_back(Matrix::from_rows(a.field, gens, d));
        }
    CategoryData data;
    data.field = a.field;
    data.objects = a.idempotent_names;
    for (std::size_t i = 0; i < n * n; ++i) {
        std::vector<std::string> labels;
        for (std::size_t r = 0; r < homs[i].dim(); ++r)
            labels.push_back(combination_label(a, homs[i].basis().row_vector(r)));
        data.hom_labels.push_back(std::move(labels));
    }
    data.products.resize(n * n * n);
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x = 0; x < n; ++x) {
                const Subspace& zy = homs[z * n + y];
                const Subspace& yx = homs[y * n + x];
                auto& table = data.products[(z * n + y) * n + x];
                for (std::size_t i = 0; i < zy.dim(); ++i)
                    for (std::size_t j = 0; j < yx.dim(); ++j)
                        table.push_back(homs[z * n + x].coordinates(
                            a.multiply(zy.basis().row_vector(i), yx.basis().row_vector(j))));
            }
    for (std::size_t x = 0; x < n; ++x)
        data.identities.push_back(homs[x * n + x].coordinates(a.idempotents[x]));
    return LinearCategory(std::move(data));
}

LinearCategory contract(const LinearCategory& c, const std::vector<std::size_t>& subset,
                        const std::optional<std::string>& name)
{
    const std::size_t n = c.object_count();
    if (subset.empty())
        throw PreconditionError("contract: empty subset");
    std::set<std::size_t> members(subset.begin(), subset.end());
    if (*members.rbegin() >= n)
        throw PreconditionError("contract: subset is not contained in the objects");
    FlatAlgebra a = flatten_to_algebra(c);
    std::vector<Vector> idempotents;
    std::vector<std::string> names;
    std::size_t first = *members.begin();
    for (std::size_t x = 0; x < n; ++x) {
        if (x == first) {
            Vector e(a.dim());
            std::string joined;
            for (auto m : members) {
                for (std::size_t k = 0; k < e.size(); ++k)
                    e[k] = a.field.add(e[k], a.idempotents[m][k]);
                joined += (joined.empty() ? "" : "+") + c.object_name(m);
            }
            idempotents.push_back(std::move(e));
            names.push_back(name ? *name : joined);
        } else if (!members.count(x)) {
            idempotents.push_back(a.idempotents[x]);
            names.push_back(c.object_name(x));
        }
    }
    a.idempotents = std::move(idempotents);
    a.idempotent_names = std::move(names);
    return category_from_algebra(a);
}

LinearCategory expand(const LinearCategory& c, std::size_t x, const std::vector<Vector>& idempotents,
                      const std::vector<std::string>& names)
{
    const std::size_t n = c.object_count();
    if (x >= n)
        throw PreconditionError("expand: object out of range");
    if (idempotents.empty())
        throw PreconditionError("expand: no idempotents given");
    if (!names.empty() && names.size() != idempotents.size())
        throw PreconditionError("expand: one name per idempotent required");
    FlatAlgebra a = flatten_to_algebra(c);
    std::size_t offset = 0;
    for (std::size_t k = 0; k < a.dim(); ++k)
        if (a.tags[k] == std::pair{x, x}) {
            offset = k;
            break;
        }
    // Orthogonality and completeness inside hom(x, x).
    Vector sum(c.hom_dim(x, x));
    for (std::size_t i = 0; i < idempotents.size(); ++i) {
        const Vector& e = idempotents[i];
        if (e.size() != c.hom_dim(x, x))
            throw PreconditionError("expand: idempotent has wrong length");
        for (std::size_t j = 0; j < idempotents.size(); ++j) {
            Vector p = c.compose(x, x, x, e, idempotents[j]);
            if (i == j ? p != e : !is_zero(p))
                throw PreconditionError("expand: vectors are not orthogonal idempotents");
        }
        if (is_zero(e))
            throw PreconditionError("expand: zero idempotent");
        for (std::size_t k = 0; k < e.size(); ++k)
            sum[k] = c.field().add(sum[k], e[k]);
    }
    if (sum != c.identity(x))
        throw PreconditionError("expand: idempotents do not sum to the identity");

    std::vector<Vector> all;
    std::vector<std::string> all_names;
    for (std::size_t o = 0; o < n; ++o) {
        if (o != x) {
            all.push_back(a.idempotents[o]);
            all_names.push_back(c.object_name(o));
            continue;
        }
        for (std::size_t i = 0; i < idempotents.size(); ++i) {
            Vector e(a.dim());
            for (std::size_t k = 0; k < idempotents[i].size(); ++k)
                e[offset + k] = idempotents[i][k];
            all.push_back(std::move(e));
            all_names.push_back(names.empty() ? c.object_name(x) + "." + std::to_string(i + 1) : names[i]);
        }
    }
    a.idempotents = std::move(all);
    a.idempotent_names = std::move(all_names);
    return category_from_algebra(a);
}

} // namespace hmcl
