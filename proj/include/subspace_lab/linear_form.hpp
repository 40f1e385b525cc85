#pragma once

#include "subspace_lab/linalg.hpp"

namespace subspace_lab {

// Linear form L(x) = sum_j coeffs[j] * x_j with coefficients in Q or Q(xi).
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(std::vector<NFElem> coeffs) : c_(std::move(coeffs)) {}

    long arity() const { return static_cast<long>(c_.size()); }
    const std::vector<NFElem>& coeffs() const { return c_; }

    bool is_rational() const;  // every coefficient in Q

    NFElem eval(const std::vector<Integer>& x) const;
    NFElem eval(const std::vector<Rat>& x) const;
    NFElem eval_nf(const std::vector<NFElem>& x) const;

    friend bool operator==(const LinearForm& a, const LinearForm& b);
    friend bool operator!=(const LinearForm& a, const LinearForm& b) { return !(a == b); }

    std::string str() const;

private:
    std::vector<NFElem> c_;
};

}  // namespace subspace_lab
