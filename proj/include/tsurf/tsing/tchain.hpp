#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsurf {

using Rational = mpq_class;

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// 1/(d n^2)(1, d n a - 1); n == 1 is a rational double point A_{d-1}
struct TSingularity {
    long d = 1;
    long n = 1;
    long a = 1;

    long order() const { return d * n * n; }
    long weight() const { return d * n * a - 1; }  // q in 1/p(1,q)
    bool is_rdp() const { return n == 1; }
    std::string str() const;                       // "1/25(1,14)" or "A_3"
    // equal up to orientation: a <-> n - a (the chain read backwards)
    bool equivalent(const TSingularity& o) const;
    bool operator==(const TSingularity& o) const = default;
};

enum class ChainKind { RDP, TProper, NotT };

struct ChainRecognition {
    ChainKind kind = ChainKind::NotT;
    std::optional<TSingularity> singularity;  // set unless NotT
};

// p/q = b1 - 1/(b2 - 1/(...)), all b_i >= 2
std::vector<long> hj_expand(long p, long q);
Rational hj_value(const std::vector<long>& chain);

ChainRecognition recognize_tchain(const std::vector<long>& chain);
std::vector<long> tchain_from_singularity(const TSingularity& s);

// cyclic quotient 1/p(1,q), q normalised into [1,p)
struct CyclicQuotient {
    long p;
    long q;
    std::string str() const;
};
// 1/n(w1,w2) with gcd(w1,n) == 1 rewritten as 1/n(1,q)
CyclicQuotient normalize_quotient(long n, long w1, long w2);

long mod_inverse(long a, long n);  // throws when not invertible
long positive_mod(long a, long n);

struct Codiscrepancy {
    std::vector<long> chain;
    std::vector<Rational> coefficients;
};

// solves Delta.E_i = 2 - b_i on the chain
Codiscrepancy codiscrepancy(const std::vector<long>& chain);
// (sum a_i E_i)^2
Rational delta_squared(const Codiscrepancy& cd);
// 1 + sum delta^2, cross-checked against 1 + sum (d_j - r_j - 1)
Rational ktilde_squared(const std::vector<std::vector<long>>& chains);

}  // namespace tsurf
