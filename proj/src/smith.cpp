#include "fermat/smith.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace fermat {

namespace {

int cmpabs(const BigInt& a, const BigInt& b)
{
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

int cmpabs(const BigInt& a, unsigned long b)
{
    return mpz_cmpabs_ui(a.get_mpz_t(), b);
}

class SmithReducer
{
public:
    SmithReducer(const IntegerMatrix& m, bool track) : a_(m), track_(track)
    {
        if (track_)
        {
            u_ = IntegerMatrix::identity(m.rows());
            v_ = IntegerMatrix::identity(m.cols());
        }
    }

    void run()
    {
        const std::size_t steps = std::min(a_.rows(), a_.cols());
        for (std::size_t t = 0; t < steps; ++t)
        {
            auto pivot = smallest_in_block(t);
            if (!pivot)
                break;
            swap_rows(t, pivot->first);
            swap_cols(t, pivot->second);
            reduce_at(t);
            if (sgn(a_(t, t)) < 0)
                negate_row(t);
        }
    }

    IntegerMatrix& matrix() { return a_; }
    IntegerMatrix& left() { return u_; }
    IntegerMatrix& right() { return v_; }

private:
    std::optional<std::pair<std::size_t, std::size_t>> smallest_in_block(std::size_t t) const
    {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < a_.rows(); ++i)
            for (std::size_t j = t; j < a_.cols(); ++j)
            {
                const BigInt& e = a_(i, j);
                if (sgn(e) == 0)
                    continue;
                if (!best || cmpabs(e, a_(best->first, best->second)) < 0)
                {
                    best = {i, j};
                    if (cmpabs(e, 1UL) == 0)
                        return best;
                }
            }
        return best;
    }

    void reduce_at(std::size_t t)
    {
        BigInt q;
        for (;;)
        {
            bool clean = true;
            for (std::size_t i = t + 1; i < a_.rows(); ++i)
            {
                if (sgn(a_(i, t)) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
                add_row_multiple(i, t, -q);
                clean = clean && sgn(a_(i, t)) == 0;
            }
            for (std::size_t j = t + 1; j < a_.cols(); ++j)
            {
                if (sgn(a_(t, j)) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
                add_col_multiple(j, t, -q);
                clean = clean && sgn(a_(t, j)) == 0;
            }

            if (!clean)
            {
                // Remainders are strictly smaller than the pivot; move the least one in.
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < a_.rows(); ++i)
                    if (sgn(a_(i, t)) != 0 && cmpabs(a_(i, t), a_(bi, bj)) < 0)
                        bi = i, bj = t;
                for (std::size_t j = t + 1; j < a_.cols(); ++j)
                    if (sgn(a_(t, j)) != 0 && cmpabs(a_(t, j), a_(bi, bj)) < 0)
                        bi = t, bj = j;
                swap_rows(t, bi);
                swap_cols(t, bj);
                continue;
            }

            if (cmpabs(a_(t, t), 1UL) == 0)
                return;
            auto bad = non_multiple_below(t);
            if (!bad)
                return;
            add_row_multiple(t, *bad, BigInt(1));
        }
    }

    /// A row below t holding an entry not divisible by the pivot, if any.
    std::optional<std::size_t> non_multiple_below(std::size_t t) const
    {
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
            for (std::size_t j = t + 1; j < a_.cols(); ++j)
                if (sgn(a_(i, j)) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t()))
                    return i;
        return std::nullopt;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        a_.swap_rows(a, b);
        if (track_)
            u_.swap_rows(a, b);
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        a_.swap_cols(a, b);
        if (track_)
            v_.swap_cols(a, b);
    }

    void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& f)
    {
        a_.add_row_multiple(dst, src, f);
        if (track_)
            u_.add_row_multiple(dst, src, f);
    }

    void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& f)
    {
        a_.add_col_multiple(dst, src, f);
        if (track_)
            v_.add_col_multiple(dst, src, f);
    }

    void negate_row(std::size_t r)
    {
        a_.negate_row(r);
        if (track_)
            u_.negate_row(r);
    }

    IntegerMatrix a_;
    IntegerMatrix u_;
    IntegerMatrix v_;
    bool track_;
};

std::vector<BigInt> diagonal_factors(const IntegerMatrix& s)
{
    std::vector<BigInt> out;
    const std::size_t n = std::min(s.rows(), s.cols());
    for (std::size_t i = 0; i < n && sgn(s(i, i)) != 0; ++i)
        out.push_back(s(i, i));
    return out;
}

} // namespace

std::vector<BigInt> SNFResult::invariant_factors() const
{
    return diagonal_factors(S);
}

SNFResult smith_normal_form(const IntegerMatrix& m)
{
    SmithReducer reducer(m, true);
    reducer.run();
    SNFResult result{std::move(reducer.matrix()), std::move(reducer.left()), std::move(reducer.right())};
    if (!(result.U * m * result.V == result.S))
        throw std::logic_error("smith_normal_form: U * M * V != S");
    return result;
}

std::vector<BigInt> smith_invariant_factors(const IntegerMatrix& m)
{
    SmithReducer reducer(m, false);
    reducer.run();
    return diagonal_factors(reducer.matrix());
}

} // namespace fermat
