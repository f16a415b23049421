#ifndef POWERGEN_SPECIAL_POLYS_HPP
#define POWERGEN_SPECIAL_POLYS_HPP

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include <powergen/errors.hpp>
#include <powergen/exact.hpp>

namespace powergen
{

namespace detail
{

inline std::size_t initial_p_limit()
{
    if (const char *env = std::getenv("POWERGEN_MAX_P")) {
        char *end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') {
            return static_cast<std::size_t>(v);
        }
    }
    return 200;
}

inline std::atomic<std::size_t> &p_limit_storage()
{
    static std::atomic<std::size_t> limit{initial_p_limit()};
    return limit;
}

} // namespace detail

// Largest p accepted by the polynomial constructors. Defaults to 200, or the
// value of POWERGEN_MAX_P when set.
inline std::size_t p_limit()
{
    return detail::p_limit_storage().load(std::memory_order_relaxed);
}

inline void set_p_limit(std::size_t limit)
{
    detail::p_limit_storage().store(limit, std::memory_order_relaxed);
}

inline void check_p_limit(std::size_t p)
{
    if (p > p_limit()) {
        throw domain_error("p = " + std::to_string(p) + " exceeds the configured limit "
                           + std::to_string(p_limit()) + " (set POWERGEN_MAX_P to raise it)");
    }
}

// Triangle of Stirling numbers of the second kind, grown lazily one row at a
// time by S(n,k) = k S(n-1,k) + S(n-1,k-1). Growth is serialised; completed
// rows never change.
class StirlingTable
{
public:
    StirlingTable()
    {
        m_rows.push_back({BigInt(1)});
    }

    StirlingTable(const StirlingTable &) = delete;
    StirlingTable &operator=(const StirlingTable &) = delete;

    // Process-wide table shared by all polynomial constructors.
    static StirlingTable &shared()
    {
        static StirlingTable table;
        return table;
    }

    BigInt get(std::size_t n, std::size_t k)
    {
        if (k > n) {
            return 0;
        }
        ensure(n);
        std::shared_lock lock(m_mutex);
        return m_rows[n][k];
    }

    // Row n: S(n,0), ..., S(n,n).
    std::vector<BigInt> row(std::size_t n)
    {
        ensure(n);
        std::shared_lock lock(m_mutex);
        return m_rows[n];
    }

    std::size_t rows_built() const
    {
        std::shared_lock lock(m_mutex);
        return m_rows.size();
    }

private:
    void ensure(std::size_t n)
    {
        {
            std::shared_lock lock(m_mutex);
            if (n < m_rows.size()) {
                return;
            }
        }
        std::unique_lock lock(m_mutex);
        while (m_rows.size() <= n) {
            const auto &prev = m_rows.back();
            const std::size_t m = m_rows.size();
            std::vector<BigInt> next(m + 1);
            next[0] = 0;
            for (std::size_t k = 1; k < m; ++k) {
                next[k] = BigInt(k) * prev[k] + prev[k - 1];
            }
            next[m] = 1;
            m_rows.push_back(std::move(next));
        }
    }

    mutable std::shared_mutex m_mutex;
    std::deque<std::vector<BigInt>> m_rows;
};

inline BigInt stirling2(std::size_t n, std::size_t k)
{
    return StirlingTable::shared().get(n, k);
}

// Exponential (Touchard) polynomial: sum_k S(p,k) x^k.
inline Polynomial exp_poly(std::size_t p)
{
    check_p_limit(p);
    const auto row = StirlingTable::shared().row(p);
    std::vector<Rational> v(row.begin(), row.end());
    return Polynomial(std::move(v));
}

// Geometric polynomial: sum_k S(p,k) k! x^k.
inline Polynomial geo_poly(std::size_t p)
{
    check_p_limit(p);
    const auto row = StirlingTable::shared().row(p);
    std::vector<Rational> v(row.size());
    BigInt fact = 1;
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (k > 0) {
            fact *= k;
        }
        v[k] = Rational(row[k] * fact);
    }
    return Polynomial(std::move(v));
}

// Generalised geometric polynomial omega_{p,r+1}: (1/r!) sum_k S(p,k) (k+r)! x^k.
// The ratio (k+r)!/r! is the rising factorial (r+1)(r+2)...(r+k), so the
// coefficients are integers.
inline Polynomial gen_geo_poly(std::size_t p, std::size_t r)
{
    check_p_limit(p);
    const auto row = StirlingTable::shared().row(p);
    std::vector<Rational> v(row.size());
    BigInt rising = 1;
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (k > 0) {
            rising *= r + k;
        }
        v[k] = Rational(row[k] * rising);
    }
    return Polynomial(std::move(v));
}

// Q_p from Q_1 = x and Q_{p+1} = x (Q_p + Q_p'). No Q_0 is defined.
inline Polynomial recurrence_poly(std::size_t p)
{
    if (p == 0) {
        throw domain_error("Q_p is defined for p >= 1 only");
    }
    check_p_limit(p);
    const Polynomial x = Polynomial::x();
    Polynomial q = x;
    for (std::size_t i = 1; i < p; ++i) {
        q = x * (q + derivative(q));
    }
    return q;
}

} // namespace powergen

#endif
