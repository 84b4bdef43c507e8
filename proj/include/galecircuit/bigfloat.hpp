#ifndef GALECIRCUIT_BIGFLOAT_HPP
#define GALECIRCUIT_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "galecircuit/rational.hpp"

namespace galecircuit {

/// Thin RAII wrapper over mpfr_t with just the operations solution lifting
/// needs. Round-to-nearest throughout; precision is fixed per value.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }

    BigFloat(const Rational& q, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }

    BigFloat& operator=(BigFloat o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    static BigFloat log_of(const Rational& q, mpfr_prec_t prec) {
        BigFloat r(q, prec);
        mpfr_log(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    BigFloat exp() const {
        BigFloat r(precision());
        mpfr_exp(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat abs() const {
        BigFloat r(precision());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    BigFloat& operator+=(const BigFloat& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    BigFloat mul_int(const Integer& k) const {
        BigFloat r(precision());
        mpfr_mul_z(r.v_, v_, k.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    int cmp(const Rational& q) const { return mpfr_cmp_q(v_, q.get_mpq_t()); }
    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Double upper bound on |*this| (rounded away from zero).
    double to_double_bound() const {
        mpfr_t t;
        mpfr_init2(t, precision());
        mpfr_abs(t, v_, MPFR_RNDU);
        double d = mpfr_get_d(t, MPFR_RNDU);
        mpfr_clear(t);
        return d;
    }

    std::string str(int digits) const {
        char* s = nullptr;
        if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0) throw Error("mpfr_asprintf failed");
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

  private:
    mpfr_t v_;
};

}  // namespace galecircuit

#endif
