#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qres/qspace.hpp"

namespace qres {

enum class ComponentRole { Exceptional, Strict };

struct DivisorComponent {
    long id = 0;
    std::string name;
    ComponentRole role = ComponentRole::Exceptional;
    bool compact = true;
    Int multiplicity = 1;
};

// A stratum E_I^o (intersected with one quotient-singularity piece Q_j).
// Coordinate convention for the local type: the first components.size()
// columns correspond to the components in sorted id order, remaining columns
// are inert directions. For 0-dimensional strata euler is the point count.
struct Stratum {
    std::vector<long> components;
    std::string singular_label;
    std::optional<QuotientType> local_type;  // absent = smooth ambient point
    std::optional<Int> declared_m;           // imported covering datum, bypasses the type
    std::map<long, Int> mult;                // component id -> local exponent
    long long euler = 0;
    int dim = 0;

    Int m;  // fiber count m(S); filled by validate()
};

struct StratifiedDivisor {
    int n = 1;  // hypersurface dimension; ambient has n+1 coordinates
    bool isolated = true;
    std::vector<DivisorComponent> components;
    std::vector<Stratum> strata;
    bool validated = false;

    const DivisorComponent& component(long id) const;
    std::vector<const Stratum*> strata_containing(long id) const;
};

struct ValidationIssue {
    std::string where;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string str() const;
};

// Checks all invariants and caches per-stratum m(S); sets sd.validated.
ValidationReport validate(StratifiedDivisor& sd);

// x^p + y^q, one exceptional divisor of multiplicity lcm(p,q)
StratifiedDivisor gen_one_branch(long p, long q);
// (x^p + y^q)(x^r + y^s) with gcd(p,q) = gcd(r,s) = 1 and p/q < r/s
StratifiedDivisor gen_two_branch(long p, long q, long r, long s);
// f_m(x,y,z) + z^{m+k}, tangent cone with one cusp point x^q + y^p
StratifiedDivisor gen_yls_cusp(long p, long q, long k, long m);
// f_m(x,y,z) + z^{m+k}, tangent cone with one (x^p+y^q)(x^r+y^s) point
StratifiedDivisor gen_yls_two_branch(long p, long q, long r, long s, long k, long m);

std::string sd_to_json(const StratifiedDivisor& sd);
StratifiedDivisor sd_from_json(const std::string& text, bool strict = true);
StratifiedDivisor load_sd(const std::string& path, bool strict = true);
void save_sd(const StratifiedDivisor& sd, const std::string& path);

}  // namespace qres
