#pragma once

#include <string>
#include <vector>

#include "glws/polynomial.hpp"

namespace glws {

/// Formal power series in z truncated after z^K, coefficients polynomial in
/// x_1..x_d with exact rational coefficients. All arithmetic is exact
/// through the truncation order.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int truncation_order);
    static TruncatedSeries zero(int truncation_order);
    static TruncatedSeries one(int truncation_order);
    static TruncatedSeries constant(int truncation_order, const Polynomial& c);

    int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Polynomial& coefficient(int power) const;
    void set_coefficient(int power, Polynomial c);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    /// Multiplicative inverse; requires constant coefficient 1.
    TruncatedSeries reciprocal() const;
    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

    /// "1 + (x1 + x2)*z + ... + O(z^{K+1})"
    std::string to_string(const VariableNamer& namer = x_name) const;

  private:
    std::vector<Polynomial> coeffs_;  // index = power of z, size K+1
};

}  // namespace glws
