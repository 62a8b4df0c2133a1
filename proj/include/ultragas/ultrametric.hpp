#ifndef ULTRAGAS_ULTRAMETRIC_HPP
#define ULTRAGAS_ULTRAMETRIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "ultragas/rational.hpp"

namespace ultragas {

/// Ball zeta + pi^r o in the ring of integers, encoded by the first r
/// base-q digits of any center. r = 0 is o itself. Two balls are equal
/// iff they have the same r and digit sequence.
class Ball {
public:
    Ball(int q, std::vector<int> digits);
    static Ball whole(int q) { return Ball(q, {}); }

    int q() const { return q_; }
    int radius_exp() const { return static_cast<int>(digits_.size()); }
    const std::vector<int>& digits() const { return digits_; }
    BigRat measure() const { return BigRat(1, 1) / BigRat(q_).pow(radius_exp()); }

    /// Prefix test: *this contains other (equality included).
    bool contains(const Ball& other) const;

    /// Text form "q:r:d0.d1..." used by the CLI, e.g. "5:2:1.3".
    std::string str() const;
    static Ball parse(const std::string& s);

    friend bool operator==(const Ball& a, const Ball& b) {
        return a.q_ == b.q_ && a.digits_ == b.digits_;
    }
    friend bool operator!=(const Ball& a, const Ball& b) { return !(a == b); }
    friend bool operator<(const Ball& a, const Ball& b) {
        return a.digits_ < b.digits_;
    }

private:
    int q_;
    std::vector<int> digits_;
};

/// Index of the first differing digit between disjoint balls (distance
/// q^-k); nullopt when one ball contains the other.
std::optional<int> ball_distance(const Ball& a, const Ball& b);

/// Ultrametric balls are nested or disjoint; true iff neither contains
/// the other.
bool disjoint(const Ball& a, const Ball& b);

/// Pairwise disjoint family, checked at construction.
class BallFamily {
public:
    BallFamily() = default;
    explicit BallFamily(std::vector<Ball> balls);

    size_t size() const { return balls_.size(); }
    bool empty() const { return balls_.empty(); }
    const Ball& operator[](size_t i) const { return balls_[i]; }
    const std::vector<Ball>& balls() const { return balls_; }
    BigRat measure() const;

    friend bool operator==(const BallFamily& a, const BallFamily& b) {
        return a.balls_ == b.balls_;
    }

private:
    std::vector<Ball> balls_;
};

/// Minimal disjoint ball family whose union is `within` minus the family's
/// union, by recursive descent over the q-ary coset tree. Throws if the
/// family is not contained in `within`.
BallFamily complement(const BallFamily& family, const Ball& within);

/// Regroups balls by leading digit; requires every ball proper (r >= 1).
/// q is passed explicitly so the empty family yields q empty groups.
std::vector<BallFamily> group_by_coset(const BallFamily& family, int q);

/// Pre-image under alpha -> j + pi*alpha: strips the leading digit.
Ball descend(const Ball& b);

} // namespace ultragas

#endif
