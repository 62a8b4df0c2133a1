#include "ultragas/multicomponent.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace ultragas {

ChargeProfile::ChargeProfile(std::vector<int> q) : charges(std::move(q)) {
    std::set<int> seen;
    for (int c : charges) {
        if (c <= 0) throw std::invalid_argument("ChargeProfile: charges must be positive");
        if (!seen.insert(c).second)
            throw std::invalid_argument("ChargeProfile: charges must be distinct");
    }
}

long multi_energy_exponent(const ChargeProfile& profile,
                           const std::vector<std::vector<PAdicSample>>& positions) {
    if (positions.size() != profile.species())
        throw std::invalid_argument("multi_energy_exponent: one position list per species");
    size_t L = 0;
    bool have_L = false;
    for (const auto& sp : positions)
        for (const auto& s : sp) {
            if (!have_L) {
                L = s.digits.size();
                have_L = true;
            }
            if (s.digits.size() != L)
                throw std::invalid_argument("multi_energy_exponent: mixed digit precision");
        }
    auto pair_val = [&](const PAdicSample& a, const PAdicSample& b) {
        int v = valuation_capped(a, b);
        if (static_cast<size_t>(v) >= L)
            throw std::domain_error("multi_energy_exponent: precision exhausted "
                                    "(coincident pair at depth L)");
        return static_cast<long>(v);
    };
    long k = 0;
    for (size_t m = 0; m < positions.size(); ++m) {
        long Q2 = static_cast<long>(profile.charges[m]) * profile.charges[m];
        const auto& pm = positions[m];
        for (size_t i = 0; i < pm.size(); ++i)
            for (size_t j = i + 1; j < pm.size(); ++j) k += Q2 * pair_val(pm[i], pm[j]);
    }
    for (size_t l = 0; l < positions.size(); ++l)
        for (size_t m = l + 1; m < positions.size(); ++m) {
            long QQ = static_cast<long>(profile.charges[l]) * profile.charges[m];
            for (const auto& a : positions[l])
                for (const auto& b : positions[m]) k += QQ * pair_val(a, b);
        }
    return k;
}

long charge_pair_exponent(const ChargeProfile& profile, const std::vector<long>& counts) {
    if (counts.size() != profile.species())
        throw std::invalid_argument("charge_pair_exponent: one count per species");
    long e = 0;
    for (size_t m = 0; m < counts.size(); ++m)
        e += static_cast<long>(profile.charges[m]) * profile.charges[m] * choose2(counts[m]);
    for (size_t l = 0; l < counts.size(); ++l)
        for (size_t m = l + 1; m < counts.size(); ++m)
            e += static_cast<long>(profile.charges[l]) * profile.charges[m] * counts[l] * counts[m];
    return e;
}

MultiTable::MultiTable(int q, ChargeProfile profile) : q_(q), profile_(std::move(profile)) {
    if (q < 2) throw std::invalid_argument("MultiTable: q must be >= 2");
}

const RationalFunction& MultiTable::Z(const std::vector<long>& counts) {
    if (counts.size() != profile_.species())
        throw std::invalid_argument("MultiTable: one count per species");
    long total = 0;
    for (long c : counts) {
        if (c < 0) throw std::invalid_argument("MultiTable: negative count");
        total += c;
    }
    if (total > 12)
        throw std::invalid_argument("MultiTable: total particle count capped at 12");
    auto it = memo_.find(counts);
    if (it != memo_.end()) return it->second;
    RationalFunction z = compute(counts);
    return memo_.emplace(counts, std::move(z)).first->second;
}

RationalFunction MultiTable::compute(const std::vector<long>& counts) {
    long total = 0;
    for (long c : counts) total += c;
    if (total <= 1) return RationalFunction(1);

    const size_t M = profile_.species();
    // occupancy matrices: one weak composition of counts[m] into q cosets per
    // species; cosets carrying the entire system are excluded (solved side)
    RationalFunction acc;
    std::vector<std::vector<long>> rows(M, std::vector<long>(static_cast<size_t>(q_), 0));
    std::function<void(size_t)> rec_species = [&](size_t m) {
        if (m == M) {
            RationalFunction term(1);
            BigRat mult(1);
            for (size_t s = 0; s < M; ++s) {
                BigRat denom(1);
                for (int r = 0; r < q_; ++r) denom *= factorial_rat(rows[s][static_cast<size_t>(r)]);
                mult *= factorial_rat(counts[s]) / denom;
            }
            long uexp_total = 0;
            std::vector<long> col(M);
            for (int r = 0; r < q_; ++r) {
                long col_total = 0;
                for (size_t s = 0; s < M; ++s) {
                    col[s] = rows[s][static_cast<size_t>(r)];
                    col_total += col[s];
                }
                if (col_total == total) return;  // single-coset matrix: excluded
                if (col_total == 0) continue;
                uexp_total += charge_pair_exponent(profile_, col);
                term = term * Z(col);
            }
            term = term * RationalFunction(mult);
            if (uexp_total > 0) term = term * RationalFunction::upow(static_cast<int>(uexp_total));
            acc += term;
            return;
        }
        // enumerate compositions of counts[m] into q cosets
        std::function<void(int, long)> rec_coset = [&](int r, long left) {
            if (r == q_ - 1) {
                rows[m][static_cast<size_t>(r)] = left;
                rec_species(m + 1);
                return;
            }
            for (long v = 0; v <= left; ++v) {
                rows[m][static_cast<size_t>(r)] = v;
                rec_coset(r + 1, left - v);
            }
        };
        rec_coset(0, counts[m]);
    };
    rec_species(0);

    BigRat qN = BigRat(q_).pow(total);
    long e = charge_pair_exponent(profile_, counts);
    UPoly denom = UPoly(qN) - UPoly::monomial(BigRat(q_), static_cast<int>(e));
    return acc / RationalFunction(denom, UPoly(BigRat(1)));
}

const RationalFunction MultiSeries::zero_ = RationalFunction();

MultiSeries::MultiSeries(int q, size_t species, int dmax)
    : q_(q), species_(species), dmax_(dmax) {
    if (q < 2) throw std::invalid_argument("MultiSeries: q must be >= 2");
    if (dmax < 0) throw std::invalid_argument("MultiSeries: dmax must be >= 0");
}

const RationalFunction& MultiSeries::coeff(const std::vector<long>& idx) const {
    auto it = c_.find(idx);
    return it == c_.end() ? zero_ : it->second;
}

void MultiSeries::set_coeff(const std::vector<long>& idx, RationalFunction v) {
    if (idx.size() != species_) throw std::invalid_argument("MultiSeries: index arity");
    long total = 0;
    for (long i : idx) {
        if (i < 0) throw std::invalid_argument("MultiSeries: negative index");
        total += i;
    }
    if (total > dmax_) throw std::invalid_argument("MultiSeries: index beyond dmax");
    if (v.is_zero())
        c_.erase(idx);
    else
        c_[idx] = std::move(v);
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    if (a.q_ != b.q_ || a.species_ != b.species_ || a.dmax_ != b.dmax_)
        throw std::invalid_argument("MultiSeries: mismatched operands");
    MultiSeries r(a.q_, a.species_, a.dmax_);
    for (const auto& [ia, ca] : a.c_) {
        long ta = 0;
        for (long v : ia) ta += v;
        for (const auto& [ib, cb] : b.c_) {
            long tb = 0;
            for (long v : ib) tb += v;
            if (ta + tb > a.dmax_) continue;
            std::vector<long> idx(ia.size());
            for (size_t k = 0; k < idx.size(); ++k) idx[k] = ia[k] + ib[k];
            r.set_coeff(idx, r.coeff(idx) + ca * cb);
        }
    }
    return r;
}

bool operator==(const MultiSeries& a, const MultiSeries& b) {
    return a.q_ == b.q_ && a.species_ == b.species_ && a.dmax_ == b.dmax_ && a.c_ == b.c_;
}

namespace {

void for_each_multi_index(size_t species, int dmax,
                          const std::function<void(const std::vector<long>&)>& visit) {
    std::vector<long> idx(species, 0);
    std::function<void(size_t, long)> rec = [&](size_t m, long left) {
        if (m == species) {
            visit(idx);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            idx[m] = v;
            rec(m + 1, left - v);
        }
    };
    rec(0, dmax);
}

} // namespace

MultiSeries multi_gc_series(MultiTable& table, bool maximal_ideal, int dmax) {
    MultiSeries s(table.q(), table.profile().species(), dmax);
    for_each_multi_index(table.profile().species(), dmax, [&](const std::vector<long>& idx) {
        BigRat fact(1);
        long total = 0;
        for (long v : idx) {
            fact *= factorial_rat(v);
            total += v;
        }
        RationalFunction c = table.Z(idx) * RationalFunction(BigRat(1) / fact);
        if (maximal_ideal) {
            c = c * RationalFunction(BigRat(1) / BigRat(table.q()).pow(total));
            long e = charge_pair_exponent(table.profile(), idx);
            if (e > 0) c = c * RationalFunction::upow(static_cast<int>(e));
        }
        s.set_coeff(idx, std::move(c));
    });
    return s;
}

bool verify_multi_qpower(int q, const ChargeProfile& profile, int dmax) {
    MultiTable table(q, profile);
    MultiSeries whole = multi_gc_series(table, false, dmax);
    MultiSeries maximal = multi_gc_series(table, true, dmax);
    MultiSeries pw(q, profile.species(), dmax);
    pw.set_coeff(std::vector<long>(profile.species(), 0), RationalFunction(1));
    for (int j = 0; j < q; ++j) pw = pw * maximal;
    return pw == whole;
}

} // namespace ultragas
