#include "subspace_lab/linear_form.hpp"

#include <sstream>

namespace subspace_lab {

bool LinearForm::is_rational() const {
    for (const NFElem& c : c_)
        if (!c.is_rational()) return false;
    return true;
}

NFElem LinearForm::eval(const std::vector<Integer>& x) const {
    if (x.size() != c_.size()) throw invariant_violation("form arity mismatch");
    NFElem acc;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (x[j] == 0) continue;
        acc += c_[j] * NFElem(Rat(x[j]));
    }
    return acc;
}

NFElem LinearForm::eval(const std::vector<Rat>& x) const {
    if (x.size() != c_.size()) throw invariant_violation("form arity mismatch");
    NFElem acc;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (x[j].is_zero()) continue;
        acc += c_[j] * NFElem(x[j]);
    }
    return acc;
}

NFElem LinearForm::eval_nf(const std::vector<NFElem>& x) const {
    if (x.size() != c_.size()) throw invariant_violation("form arity mismatch");
    NFElem acc;
    for (std::size_t j = 0; j < c_.size(); ++j) acc += c_[j] * x[j];
    return acc;
}

bool operator==(const LinearForm& a, const LinearForm& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t j = 0; j < a.c_.size(); ++j)
        if (a.c_[j] != b.c_[j]) return false;
    return true;
}

std::string LinearForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        os << (first ? "" : " + ") << "(" << c_[j].str() << ")*X" << (j + 1);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace subspace_lab
