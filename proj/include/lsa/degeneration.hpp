#pragma once

// Degeneration certificates: a parametrized basis E_i^t (rows of a matrix
// over rational functions of t, invertible as such) transports the
// structure constants of A, and A degenerates to B when every transported
// constant has a finite limit at t = 0 equal to B's constant.  Families use
// a parametrized index binding their parameters to rational functions.
// Witnesses are verified here, never searched for.

#include <map>
#include <string>
#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/catalog.hpp"
#include "lsa/matrix.hpp"
#include "lsa/ratfunc.hpp"

namespace lsa {

struct DegenerationWitness {
    Matrix<RatFunc> basis;                    // row i = E_i^t in the e_j coordinates
    std::map<std::string, RatFunc> param_index;  // family parameter paths f(t)
};

// Lift a fixed-coefficient algebra into the rational-function field.
inline Algebra<RatFunc> lift(const Algebra<GaussRational>& a) {
    Algebra<RatFunc> out(a.n, a.label);
    for (std::size_t idx = 0; idx < a.c.size(); ++idx) out.c[idx] = RatFunc(a.c[idx]);
    return out;
}

// Structure constants of A in the witness basis, exact over Q(i)(t).
inline Algebra<RatFunc> transported_constants(const Algebra<RatFunc>& a,
                                              const Matrix<RatFunc>& basis) {
    if (basis.rows() != a.n || basis.cols() != a.n)
        throw Error("transported_constants: basis shape mismatch");
    if (rank(basis) != a.n)
        throw Error("transported_constants: basis is singular as a rational-function matrix");
    return change_of_basis(a, basis);
}

struct DegenerationCheck {
    bool pass = false;
    // on failure: the offending entry and its transported value
    std::size_t i = 0, j = 0, k = 0;
    RatFunc value;
    std::string reason;
};

// pass iff every transported constant has a finite limit at t = 0 and the
// limit tensor equals B exactly.
inline DegenerationCheck verify_degeneration(const Algebra<RatFunc>& a,
                                             const Matrix<RatFunc>& basis,
                                             const Algebra<GaussRational>& b) {
    if (a.n != b.n) throw Error("verify_degeneration: dimension mismatch");
    Algebra<RatFunc> moved = transported_constants(a, basis);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j)
            for (std::size_t k = 0; k < a.n; ++k) {
                const RatFunc& v = moved.prod(i, j, k);
                if (!v.has_limit_at_zero())
                    return {false, i, j, k, v, "pole at t = 0"};
                if (v.limit_at_zero() != b.prod(i, j, k))
                    return {false, i, j, k, v,
                            "limit " + to_string(v.limit_at_zero()) + " differs from " +
                                to_string(b.prod(i, j, k))};
            }
    DegenerationCheck ok;
    ok.pass = true;
    return ok;
}

inline DegenerationCheck verify_degeneration(const Algebra<RatFunc>& a,
                                             const DegenerationWitness& w,
                                             const Algebra<GaussRational>& b) {
    return verify_degeneration(a, w.basis, b);
}

struct NecessaryConditions {
    bool ok = true;
    bool self_comparison = false;
    std::vector<std::string> violated;
};

// Checks the certificates that forbid a proper degeneration A -> B:
// dim Der(A) < dim Der(B), dim A*A >= dim B*B, dim Ann(A) <= dim Ann(B).
// Any violation proves non-degeneration (given A and B not isomorphic).
inline NecessaryConditions necessary_conditions(const Algebra<GaussRational>& a,
                                                const Algebra<GaussRational>& b) {
    NecessaryConditions out;
    if (same_constants(a, b)) {
        out.self_comparison = true;  // A -> A always holds; conditions not applicable
        return out;
    }
    if (!(derivation_dimension(a) < derivation_dimension(b))) {
        out.ok = false;
        out.violated.push_back("dim Der(A) < dim Der(B)");
    }
    if (!(power_dim(a, 2) >= power_dim(b, 2))) {
        out.ok = false;
        out.violated.push_back("dim A*A >= dim B*B");
    }
    if (!(annihilator(a).dim() <= annihilator(b).dim())) {
        out.ok = false;
        out.violated.push_back("dim Ann(A) <= dim Ann(B)");
    }
    return out;
}

struct OrbitDimensionReport {
    std::string label;
    std::size_t n = 0;
    std::size_t dim_der = 0;
    std::size_t param_count = 0;
    std::size_t orbit_dim = 0;      // n^2 - dim Der
    std::size_t component_dim = 0;  // orbit_dim + param_count
    bool der_constant = true;       // dim Der equal across the sampled set
    std::vector<std::size_t> sampled_der;
};

// dim of the closure of a family's union of orbits as n^2 - dim Der +
// number of free parameters, with dim Der sampled across the given (or
// default) parameter sets.  A non-constant sampled dim Der flags a
// generic/special stratification instead of silently picking one value.
inline OrbitDimensionReport component_dimension(const std::string& label,
                                                std::vector<ParamMap> samples = {}) {
    const CatalogEntry& e = entry(label);
    if (samples.empty()) samples = e.default_samples;
    if (e.parametric() && samples.empty())
        throw Error("component_dimension: no parameter samples for " + label);

    OrbitDimensionReport out;
    out.label = e.label;
    out.n = e.dim;
    out.param_count = e.params.size();
    if (!e.parametric()) {
        out.dim_der = derivation_dimension(instantiate(e.label));
        out.sampled_der.push_back(out.dim_der);
    } else {
        for (const auto& binds : samples)
            out.sampled_der.push_back(derivation_dimension(instantiate<GaussRational>(e, binds)));
        out.dim_der = out.sampled_der.front();
        for (std::size_t d : out.sampled_der)
            if (d != out.dim_der) out.der_constant = false;
    }
    out.orbit_dim = out.n * out.n - out.dim_der;
    out.component_dim = out.orbit_dim + out.param_count;
    return out;
}

}  // namespace lsa
