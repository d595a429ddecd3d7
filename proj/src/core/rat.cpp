#include "vq/core/rat.hpp"

#include <ostream>

#include "vq/core/errors.hpp"

namespace vq {

Rat::Rat(const Int& num, const Int& den) {
    if (den.is_zero()) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num.mpz(), den.mpz());
    v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(Int::parse(text));
    Int n = Int::parse(text.substr(0, slash));
    Int d = Int::parse(text.substr(slash + 1));
    if (d.is_zero()) throw UsageError("zero denominator in '" + std::string(text) + "'");
    return Rat(n, d);
}

std::string Rat::to_string() const {
    return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& v) {
    return os << v.to_string();
}

Rat abs(const Rat& v) {
    return Rat(mpq_class(::abs(v.mpq())));
}

Rat pow(const Rat& base, long exp) {
    unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    Int n = pow(base.num(), e);
    Int d = pow(base.den(), e);
    if (exp < 0) {
        if (n.is_zero()) throw DomainError("zero to a negative power");
        return Rat(d, n);
    }
    return Rat(n, d);
}

Int floor(const Rat& v) {
    return floor_div(v.num(), v.den());
}

} // namespace vq
