#include "hmcl/lincat/category.hpp"

#include "hmcl/error.hpp"

namespace hmcl {

namespace {

std::string triple(const LinearCategory& c, std::size_t z, std::size_t y, std::size_t x)
{
    return c.object_name(x) + " -> " + c.object_name(y) + " -> " + c.object_name(z);
}

// a += s * b
void axpy(const Field& f, Vector& a, const Scalar& s, const Vector& b)
{
    if (sgn(s) == 0)
        return;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (sgn(b[k]) != 0)
            a[k] = f.add(a[k], f.mul(s, b[k]));
}

} // namespace

LinearCategory::LinearCategory(CategoryData data) : data_(std::move(data))
{
    validate();
}

std::size_t LinearCategory::object_index(const std::string& name) const
{
    for (std::size_t i = 0; i < data_.objects.size(); ++i)
        if (data_.objects[i] == name)
            return i;
    throw InputError("unknown object '" + name + "'");
}

std::size_t LinearCategory::total_dim() const
{
    std::size_t d = 0;
    for (const auto& labels : data_.hom_labels)
        d += labels.size();
    return d;
}

Vector LinearCategory::compose(std::size_t z, std::size_t y, std::size_t x, const Vector& f, const Vector& g) const
{
    const Field& fld = field();
    if (f.size() != hom_dim(z, y) || g.size() != hom_dim(y, x))
        throw PreconditionError("compose: vector length does not match hom dimension for " + triple(*this, z, y, x));
    Vector out(hom_dim(z, x));
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (sgn(f[i]) == 0)
            continue;
        for (std::size_t j = 0; j < g.size(); ++j)
            if (sgn(g[j]) != 0)
                axpy(fld, out, fld.mul(f[i], g[j]), product(z, y, x, i, j));
    }
    return out;
}

void LinearCategory::validate() const
{
    const std::size_t n = object_count();
    const Field& f = field();
    if (data_.hom_labels.size() != n * n || data_.products.size() != n * n * n || data_.identities.size() != n)
        throw InvariantError("category data has inconsistent sizes");
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x = 0; x < n; ++x) {
                const auto& table = data_.products[(z * n + y) * n + x];
                if (table.size() != hom_dim(z, y) * hom_dim(y, x))
                    throw InvariantError("composition table has wrong size for " + triple(*this, z, y, x));
                for (const auto& v : table) {
                    if (v.size() != hom_dim(z, x))
                        throw InvariantError("composite has wrong length for " + triple(*this, z, y, x));
                    for (const auto& s : v)
                        if (!f.is_canonical(s))
                            throw InvariantError("non-canonical structure constant");
                }
            }
    for (std::size_t x = 0; x < n; ++x) {
        if (data_.identities[x].size() != hom_dim(x, x))
            throw InvariantError("identity of " + object_name(x) + " has wrong length");
        // Units: 1_y g = g and f 1_x = f on basis elements.
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t j = 0; j < hom_dim(y, x); ++j) {
                Vector e(hom_dim(y, x));
                e[j] = 1;
                if (compose(y, y, x, identity(y), e) != e || compose(y, x, x, e, identity(x)) != e)
                    throw InvariantError("identity axiom fails on " + hom_labels(y, x)[j]);
            }
        }
    }
    // Associativity on basis triples w <- z <- y <- x.
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t z = 0; z < n; ++z)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t x = 0; x < n; ++x) {
                    std::size_t dwz = hom_dim(w, z), dzy = hom_dim(z, y), dyx = hom_dim(y, x);
                    if (!dwz || !dzy || !dyx)
                        continue;
                    for (std::size_t a = 0; a < dwz; ++a)
                        for (std::size_t b = 0; b < dzy; ++b)
                            for (std::size_t c = 0; c < dyx; ++c) {
                                Vector ab = product(w, z, y, a, b);
                                Vector bc = product(z, y, x, b, c);
                                Vector ea(dwz), ec(dyx);
                                ea[a] = 1;
                                ec[c] = 1;
                                if (compose(w, y, x, ab, ec) != compose(w, z, x, ea, bc))
                                    throw InvariantError("composition is not associative on (" + hom_labels(w, z)[a] +
                                                         ", " + hom_labels(z, y)[b] + ", " + hom_labels(y, x)[c] + ")");
                            }
                }
}

bool same_hom_dims(const LinearCategory& a, const LinearCategory& b)
{
    if (a.object_count() != b.object_count())
        return false;
    for (std::size_t y = 0; y < a.object_count(); ++y)
        for (std::size_t x = 0; x < a.object_count(); ++x)
            if (a.hom_dim(y, x) != b.hom_dim(y, x))
                return false;
    return true;
}

LinearCategory disjoint_union(const LinearCategory& a, const LinearCategory& b)
{
    if (!(a.field() == b.field()))
        throw PreconditionError("disjoint union over different fields");
    const std::size_t na = a.object_count(), n = na + b.object_count();
    // (component, local index); compare components by side, not by address
    auto part = [&](std::size_t o) -> std::pair<const LinearCategory*, std::size_t> {
        return o < na ? std::pair{&a, o} : std::pair{&b, o - na};
    };
    auto side = [&](std::size_t o) { return o < na; };
    CategoryData d;
    d.field = a.field();
    d.objects = a.object_names();
    for (const auto& name : b.object_names())
        d.objects.push_back(name);
    d.hom_labels.resize(n * n);
    d.products.resize(n * n * n);
    d.identities.resize(n);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x) {
            auto [cy, ly] = part(y);
            auto [cx, lx] = part(x);
            if (side(y) == side(x))
                d.hom_labels[y * n + x] = cy->hom_labels(ly, lx);
        }
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x = 0; x < n; ++x) {
                auto [cz, lz] = part(z);
                auto [cy, ly] = part(y);
                auto [cx, lx] = part(x);
                if (side(z) == side(y) && side(y) == side(x))
                    d.products[(z * n + y) * n + x] = cz->data().products[(lz * cz->object_count() + ly) *
                                                                              cz->object_count() + lx];
            }
    for (std::size_t x = 0; x < n; ++x) {
        auto [cx, lx] = part(x);
        d.identities[x] = cx->identity(lx);
    }
    return LinearCategory(std::move(d));
}

void LinearFunctor::validate() const
{
    const std::size_t n = source->object_count();
    const Field& f = source->field();
    if (object_map.size() != n || hom_maps.size() != n * n)
        throw InvariantError("functor data has inconsistent sizes");
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x) {
            const Matrix& m = hom_map(y, x);
            if (m.rows() != target->hom_dim(object_map[y], object_map[x]) || m.cols() != source->hom_dim(y, x))
                throw InvariantError("functor hom map has wrong shape");
        }
    for (std::size_t x = 0; x < n; ++x)
        if (hom_map(x, x).apply(source->identity(x)) != target->identity(object_map[x]))
            throw InvariantError("functor does not preserve the identity of " + source->object_name(x));
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t i = 0; i < source->hom_dim(z, y); ++i)
                    for (std::size_t j = 0; j < source->hom_dim(y, x); ++j) {
                        Vector lhs = hom_map(z, x).apply(source->product(z, y, x, i, j));
                        Vector ei(source->hom_dim(z, y)), ej(source->hom_dim(y, x));
                        ei[i] = f.one();
                        ej[j] = f.one();
                        Vector rhs = target->compose(object_map[z], object_map[y], object_map[x],
                                                     hom_map(z, y).apply(ei), hom_map(y, x).apply(ej));
                        if (lhs != rhs)
                            throw InvariantError("functor does not preserve composition");
                    }
}

LinearFunctor identity_functor(CategoryPtr c)
{
    LinearFunctor f;
    f.source = c;
    f.target = c;
    const std::size_t n = c->object_count();
    for (std::size_t x = 0; x < n; ++x)
        f.object_map.push_back(x);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            f.hom_maps.push_back(Matrix::identity(c->field(), c->hom_dim(y, x)));
    return f;
}

} // namespace hmcl
