#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hgc/params.hpp"

namespace hgc {

using Exponents = std::array<int, 3>;

// Sparse Laurent polynomial in up to three variables.
using MonoPoly = std::map<Exponents, cd>;

double max_abs(const MonoPoly& p);
MonoPoly operator+(const MonoPoly& a, const MonoPoly& b);
MonoPoly operator*(cd s, const MonoPoly& p);

struct Prim {
    enum Kind { MulVar, Diff, MulPolyZ } kind;
    int var = 0;
    int power = 1;  // MulVar
    PolyC poly;     // MulPolyZ, polynomial in the variable var
};

// Linear combination of words; a word acts right to left.
struct MonomialOperator {
    struct Word {
        cd coeff;
        std::vector<Prim> prims;
    };
    std::vector<Word> words;

    static MonomialOperator identity();
    static MonomialOperator mul_var(int var, int power);
    static MonomialOperator diff(int var);
    static MonomialOperator mul_poly(int var, const PolyC& p);

    MonoPoly apply(const Exponents& e) const;
    MonoPoly apply(const MonoPoly& p) const;
};

MonomialOperator operator+(const MonomialOperator& a, const MonomialOperator& b);
MonomialOperator operator*(cd s, const MonomialOperator& a);
MonomialOperator operator-(const MonomialOperator& a, const MonomialOperator& b);
// composition: (a*b)(f) = a(b(f))
MonomialOperator operator*(const MonomialOperator& a, const MonomialOperator& b);
MonomialOperator commutator(const MonomialOperator& a, const MonomialOperator& b);

enum class MillerRep { Reduced, Full };

enum class AlgebraTag { Sl2PlusC, Osc, EuclidPlusC };
std::string to_string(AlgebraTag t);

struct MillerGenerators {
    MillerRep rep;
    // Reduced: variables (w, z); Full: (t, s, z).
    int nvars;
    int z_index;
    cd alpha, beta;
    MonomialOperator N, Aplus, Aminus, One;
    MonomialOperator casimir;
    AlgebraTag algebra_tag;
    EquationParams params;
};

MillerGenerators miller_generators(const EquationParams& p, MillerRep rep);

struct CommutationReport {
    double n_aplus = 0, n_aminus = 0, aplus_aminus = 0;
    double casimir_n = 0, casimir_aplus = 0, casimir_aminus = 0;
    double quadric = 0;  // Full only: commutation with sigma(z) - ts
    int monomials = 0;
    double max_residual() const;
};

// Every relation applied to all monomials with total |exponent| <= degree_bound.
CommutationReport verify_miller_commutation(const MillerGenerators& g, int degree_bound);

} // namespace hgc
