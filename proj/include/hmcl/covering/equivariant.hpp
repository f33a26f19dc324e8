#pragma once

#include "hmcl/covering/action.hpp"
#include "hmcl/hochmitch/hochschild.hpp"

namespace hmcl {

// A based complex with a representation of G in every degree.
struct EquivariantComplex {
    BasedComplex complex;
    std::vector<KGModule> actions;
    std::vector<TensorBasis> bases; // empty unless built from a nerve complex

    // Each action is a representation and commutes with the differentials;
    // throws InvariantError.
    void validate() const;
};

// C_*(C, L) with s(u; c_n, ..., c_1) = (u; s c_n, ..., s c_1). Throws
// PreconditionError unless L is fixed by the twist action.
EquivariantComplex action_on_chains(const GroupAction& a, const Bimodule& lifted, std::size_t max_degree);
// C^*(C, L) with (s f)(c_n, ..., c_1) = f(s^-1 c_n, ..., s^-1 c_1).
EquivariantComplex action_on_cochains(const GroupAction& a, const Bimodule& lifted, std::size_t max_degree);

// Every non-identity element sends each basis vector to a multiple of a
// different basis vector, so the basis splits into regular orbits.
bool is_free_on_basis(const KGModule& m);

// A complex derived degreewise from an equivariant one. For coinvariants
// maps[n] is the projection onto the quotient; for invariants it is the
// inclusion of the fixed subspace.
struct ReducedComplex {
    BasedComplex complex;
    std::vector<Matrix> maps;
};

ReducedComplex coinvariants_complex(const EquivariantComplex& e);
ReducedComplex invariants_complex(const EquivariantComplex& e);

struct EquivariantHomology {
    HomologyResult homology;
    std::vector<KGModule> actions; // on the representative bases
};

EquivariantHomology homology_with_action(const EquivariantComplex& e);

struct IsoCheck {
    bool ok = true;
    std::string diagnostic;
};

// Compares C_*(C, L M)/G with C_*(B, M) through the projection of morphisms
// and its inverse built from lifts along the section, degrees 0..max_degree.
IsoCheck chain_coinvariants_iso_check(const QuotientData& q, const Bimodule& m, std::size_t max_degree);

} // namespace hmcl
