#ifndef COTZETA_MODULAR_HPP
#define COTZETA_MODULAR_HPP

#include <cotzeta/quad.hpp>

#include <string>
#include <vector>

namespace cotzeta
{

/// Integer 2x2 matrix (a b; c d) with ad - bc = 1.
class UniMat
{
public:
    // Throws InputError unless ad - bc == 1.
    UniMat(Integer a, Integer b, Integer c, Integer d);

    static UniMat identity()
    {
        return UniMat(1, 0, 0, 1);
    }

    const Integer &a() const
    {
        return m_a;
    }
    const Integer &b() const
    {
        return m_b;
    }
    const Integer &c() const
    {
        return m_c;
    }
    const Integer &d() const
    {
        return m_d;
    }
    Integer det() const
    {
        return m_a * m_d - m_b * m_c;
    }

    // "(a,b;c,d)"
    std::string to_string() const;

    friend UniMat operator*(const UniMat &x, const UniMat &y);
    friend bool operator==(const UniMat &x, const UniMat &y) = default;

private:
    Integer m_a;
    Integer m_b;
    Integer m_c;
    Integer m_d;
};

/// Primitive A x^2 + B x + C with A > 0 vanishing at alpha; disc = B^2 - 4AC.
struct MinPoly {
    Integer A;
    Integer B;
    Integer C;
    Integer disc;
};

MinPoly minimal_polynomial(const QuadElem &alpha);

/// Smallest solution of t^2 - disc u^2 = 4 with u > 0 (and t > 0).
struct PellSolution {
    Integer t;
    Integer u;
};

PellSolution pell4(const Integer &disc);

QuadElem moebius(const UniMat &V, const QuadElem &alpha);

// c alpha + d.
QuadElem eta_of(const UniMat &V, const QuadElem &alpha);

struct StabilizerResult {
    UniMat V;
    QuadElem eta;
    MinPoly poly;
    PellSolution pell;
};

/// A matrix V with c > 0 fixing alpha, and the totally positive unit
/// eta = c alpha + d of norm 1, built from the Pell solution of the
/// discriminant of alpha's minimal polynomial:
///   V = ((t - Bu)/2, -Cu; Au, (t + Bu)/2).
StabilizerResult stabilizer(const QuadElem &alpha);

struct CheckEntry {
    std::string name;
    bool pass;
    std::string detail;
};

/// Per-check outcome of validate_pair. The first four checks are the
/// hypotheses of the finite identity; the remaining ones are what the
/// closed form additionally needs.
struct PairReport {
    std::vector<CheckEntry> checks;

    bool finite_identity_ok() const;
    bool all_ok() const;
    const CheckEntry *find(const std::string &name) const;
};

PairReport validate_pair(const QuadElem &alpha, const UniMat &V, const QuadElem &eta);

} // namespace cotzeta

#endif
