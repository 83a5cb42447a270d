#include "horn/forms.hpp"

#include <cmath>

#include "horn/error.hpp"

namespace horn {

std::string ijk_name(int idx) {
    std::string s(3, '1');
    if (idx & 4) s[0] = '2';
    if (idx & 2) s[1] = '2';
    if (idx & 1) s[2] = '2';
    return s;
}

int ijk_from_name(const std::string& name) {
    if (name.size() != 3) throw HornError(ErrorCode::ParseError, "bad index triple " + name);
    int idx = 0;
    for (char ch : name) {
        if (ch != '1' && ch != '2') throw HornError(ErrorCode::ParseError, "bad index triple " + name);
        idx = idx * 2 + (ch - '1');
    }
    return idx;
}

Angle LinearForm::eval(const std::array<Angle, 6>& x) const {
    Angle r = Angle::exact(0);
    for (int i = 0; i < 6; ++i)
        if (c[i] != 0) r = r + c[i] * x[i];
    return r;
}

double LinearForm::eval(const std::array<double, 6>& x) const {
    double r = 0.0;
    for (int i = 0; i < 6; ++i) r += c[i] * x[i];
    return r;
}

double LinearForm::norm() const {
    double n = 0.0;
    for (int v : c) n += double(v) * v;
    return std::sqrt(n);
}

LinearForm LinearForm::S() { return {{1, 1, 1, 1, 1, 1}}; }

LinearForm LinearForm::sigma(int idx) {
    LinearForm f;
    f.c[(idx >> 2) & 1] = 1;
    f.c[2 + ((idx >> 1) & 1)] = 1;
    f.c[4 + (idx & 1)] = 1;
    return f;
}

LinearForm LinearForm::H(int idx) {
    LinearForm a = sigma(idx), b = sigma(complement(idx)), f;
    for (int i = 0; i < 6; ++i) f.c[i] = 2 * a.c[i] - b.c[i];
    return f;
}

LinearFormValues linear_forms(const ClassTriple& t) {
    auto x = t.coords();
    LinearFormValues v;
    v.S = LinearForm::S().eval(x);
    for (int i = 0; i < 8; ++i) v.sigma[i] = LinearForm::sigma(i).eval(x);
    for (int i = 0; i < 8; ++i) v.H[i] = 2 * v.sigma[i] - v.sigma[complement(i)];
    return v;
}

}  // namespace horn
