#include "ultragas/ultrametric.hpp"

#include <algorithm>
#include <stdexcept>

namespace ultragas {

Ball::Ball(int q, std::vector<int> digits) : q_(q), digits_(std::move(digits)) {
    if (q < 2) throw std::invalid_argument("Ball: q must be >= 2");
    for (int d : digits_)
        if (d < 0 || d >= q)
            throw std::invalid_argument("Ball: digit out of range [0, q)");
}

bool Ball::contains(const Ball& other) const {
    if (q_ != other.q_ || other.digits_.size() < digits_.size()) return false;
    return std::equal(digits_.begin(), digits_.end(), other.digits_.begin());
}

std::string Ball::str() const {
    std::string s = std::to_string(q_) + ":" + std::to_string(radius_exp()) + ":";
    for (size_t i = 0; i < digits_.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(digits_[i]);
    }
    return s;
}

Ball Ball::parse(const std::string& s) {
    auto c1 = s.find(':');
    auto c2 = s.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("Ball: expected \"q:r:d0.d1...\", got '" + s + "'");
    int q, r;
    try {
        q = std::stoi(s.substr(0, c1));
        r = std::stoi(s.substr(c1 + 1, c2 - c1 - 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("Ball: bad q or r in '" + s + "'");
    }
    std::vector<int> digits;
    std::string rest = s.substr(c2 + 1);
    size_t pos = 0;
    while (pos < rest.size()) {
        auto dot = rest.find('.', pos);
        std::string tok = rest.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
        try {
            digits.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument("Ball: bad digit '" + tok + "' in '" + s + "'");
        }
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    if (static_cast<int>(digits.size()) != r)
        throw std::invalid_argument("Ball: digit count does not match r in '" + s + "'");
    return Ball(q, std::move(digits));
}

std::optional<int> ball_distance(const Ball& a, const Ball& b) {
    size_t depth = std::min(a.digits().size(), b.digits().size());
    for (size_t k = 0; k < depth; ++k)
        if (a.digits()[k] != b.digits()[k]) return static_cast<int>(k);
    return std::nullopt;  // nested or equal
}

bool disjoint(const Ball& a, const Ball& b) {
    return ball_distance(a, b).has_value();
}

BallFamily::BallFamily(std::vector<Ball> balls) : balls_(std::move(balls)) {
    for (size_t i = 0; i < balls_.size(); ++i)
        for (size_t j = i + 1; j < balls_.size(); ++j)
            if (!disjoint(balls_[i], balls_[j]))
                throw std::invalid_argument("BallFamily: balls " + balls_[i].str() + " and " +
                                            balls_[j].str() + " are not disjoint");
}

BigRat BallFamily::measure() const {
    BigRat m(0);
    for (const auto& b : balls_) m += b.measure();
    return m;
}

namespace {

void complement_rec(int q, const std::vector<const Ball*>& family, const Ball& within,
                    std::vector<Ball>& out) {
    if (family.empty()) {
        out.push_back(within);
        return;
    }
    int r = within.radius_exp();
    for (const Ball* b : family) {
        if (b->radius_exp() == r) return;  // family ball equals `within`: nothing left
    }
    for (int j = 0; j < q; ++j) {
        std::vector<int> d = within.digits();
        d.push_back(j);
        Ball child(q, std::move(d));
        std::vector<const Ball*> sub;
        for (const Ball* b : family)
            if (b->digits()[r] == j) sub.push_back(b);
        complement_rec(q, sub, child, out);
    }
}

} // namespace

BallFamily complement(const BallFamily& family, const Ball& within) {
    std::vector<const Ball*> ptrs;
    for (const auto& b : family.balls()) {
        if (!within.contains(b))
            throw std::invalid_argument("complement: ball " + b.str() +
                                        " is not contained in " + within.str());
        ptrs.push_back(&b);
    }
    std::vector<Ball> out;
    complement_rec(within.q(), ptrs, within, out);
    return BallFamily(std::move(out));
}

std::vector<BallFamily> group_by_coset(const BallFamily& family, int q) {
    if (q < 2) throw std::invalid_argument("group_by_coset: q must be >= 2");
    std::vector<std::vector<Ball>> groups(static_cast<size_t>(q));
    for (const auto& b : family.balls()) {
        if (b.q() != q)
            throw std::invalid_argument("group_by_coset: mixed q");
        if (b.radius_exp() == 0)
            throw std::invalid_argument("group_by_coset: family contains o itself");
        groups[static_cast<size_t>(b.digits()[0])].push_back(b);
    }
    std::vector<BallFamily> out;
    out.reserve(static_cast<size_t>(q));
    for (auto& g : groups) out.emplace_back(std::move(g));
    return out;
}

Ball descend(const Ball& b) {
    if (b.radius_exp() == 0)
        throw std::invalid_argument("descend: o has no leading digit");
    return Ball(b.q(), std::vector<int>(b.digits().begin() + 1, b.digits().end()));
}

} // namespace ultragas
