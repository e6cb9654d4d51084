#include "glws/power_series.hpp"

#include <sstream>
#include <stdexcept>

namespace glws {

TruncatedSeries::TruncatedSeries(int truncation_order) {
    if (truncation_order < 0) throw std::invalid_argument("negative truncation order");
    coeffs_.resize(truncation_order + 1);
}

TruncatedSeries TruncatedSeries::zero(int truncation_order) {
    return TruncatedSeries(truncation_order);
}

TruncatedSeries TruncatedSeries::one(int truncation_order) {
    return constant(truncation_order, Polynomial::one());
}

TruncatedSeries TruncatedSeries::constant(int truncation_order, const Polynomial& c) {
    TruncatedSeries s(truncation_order);
    s.coeffs_[0] = c;
    return s;
}

const Polynomial& TruncatedSeries::coefficient(int power) const {
    if (power < 0 || power > truncation_order())
        throw std::out_of_range("series coefficient index");
    return coeffs_[power];
}

void TruncatedSeries::set_coefficient(int power, Polynomial c) {
    if (power < 0 || power > truncation_order())
        throw std::out_of_range("series coefficient index");
    coeffs_[power] = std::move(c);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (truncation_order() != o.truncation_order())
        throw std::invalid_argument("series truncation orders differ");
    TruncatedSeries out(truncation_order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    if (truncation_order() != o.truncation_order())
        throw std::invalid_argument("series truncation orders differ");
    TruncatedSeries out(truncation_order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (truncation_order() != o.truncation_order())
        throw std::invalid_argument("series truncation orders differ");
    TruncatedSeries out(truncation_order());
    const int K = truncation_order();
    for (int i = 0; i <= K; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= K; ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    if (coeffs_[0] != Polynomial::one())
        throw std::invalid_argument("series reciprocal needs constant term 1");
    const int K = truncation_order();
    TruncatedSeries out(K);
    out.coeffs_[0] = Polynomial::one();
    for (int j = 1; j <= K; ++j) {
        Polynomial acc;
        for (int t = 1; t <= j; ++t) acc += coeffs_[t] * out.coeffs_[j - t];
        out.coeffs_[j] = -acc;
    }
    return out;
}

std::string TruncatedSeries::to_string(const VariableNamer& namer) const {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j <= truncation_order(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string c = coeffs_[j].to_string(namer);
        if (j == 0) {
            os << c;
            continue;
        }
        bool atomic =
            coeffs_[j].term_count() == 1 && c.find(' ') == std::string::npos && c[0] != '-';
        if (c == "1")
            os << "";
        else if (atomic)
            os << c << "*";
        else
            os << "(" << c << ")*";
        os << "z";
        if (j > 1) os << "^" << j;
    }
    if (first) os << "0";
    os << " + O(z^" << truncation_order() + 1 << ")";
    return os.str();
}

}  // namespace glws
