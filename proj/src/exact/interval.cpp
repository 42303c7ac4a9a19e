#include "ss/exact/interval.hpp"

#include <algorithm>
#include <sstream>

#include "ss/error.hpp"

namespace ss {

QInterval::QInterval(Rat a, Rat b) : lo(std::move(a)), hi(std::move(b)) {
    require(lo <= hi, "interval endpoints out of order");
}

QInterval QInterval::operator*(const QInterval& o) const {
    Rat p1 = lo * o.lo, p2 = lo * o.hi, p3 = hi * o.lo, p4 = hi * o.hi;
    Rat mn = std::min(std::min(p1, p2), std::min(p3, p4));
    Rat mx = std::max(std::max(p1, p2), std::max(p3, p4));
    return QInterval(mn, mx);
}

QInterval QInterval::sq() const {
    Rat a = lo * lo, b = hi * hi;
    if (contains_zero()) return QInterval(Rat(0), std::max(a, b));
    return QInterval(std::min(a, b), std::max(a, b));
}

QInterval QInterval::inv() const {
    require(!contains_zero(), "interval reciprocal across zero");
    return QInterval(Rat(1) / hi, Rat(1) / lo);
}

std::string QInterval::str() const {
    std::ostringstream os;
    os << "[" << to_string(lo) << ", " << to_string(hi) << "]";
    return os.str();
}

QBox QBox::inv() const {
    QInterval n2 = norm2();
    require(n2.lo > 0, "box reciprocal across zero");
    QInterval in2 = n2.inv();
    return {re * in2, (-im) * in2};
}

std::string QBox::str() const {
    return re.str() + " + i*" + im.str();
}

QBox box_point(const Rat& re, const Rat& im) {
    return {QInterval::point(re), QInterval::point(im)};
}

QBox box_eval(const IntPoly& p, const QBox& z) {
    QBox acc = box_point(Rat(0), Rat(0));
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * z + box_point(Rat(p.coeff(i)), Rat(0));
    }
    return acc;
}

}  // namespace ss
