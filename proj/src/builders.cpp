#include "fatlab/liealg.hpp"

#include <stdexcept>

namespace fatlab::lie::builders {

std::vector<MatQ> so_basis(int n) {
  std::vector<MatQ> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MatQ e(n, n);
      e.at(i, j) = Rational(1);
      e.at(j, i) = Rational(-1);
      out.push_back(std::move(e));
    }
  return out;
}

MatQ M_vector(const VecQ& z) {
  const int n = int(z.size());
  MatQ m(n + 1, n + 1);
  for (int i = 0; i < n; ++i) {
    m.at(i, n) = z[i];
    m.at(n, i) = -z[i];
  }
  return m;
}

MatQ g2_elem(const std::vector<Rational>& p) {
  if (p.size() != 14) throw std::invalid_argument("g2_elem: 14 parameters required");
  const Rational &x1 = p[0], &x2 = p[1], &x3 = p[2], &x4 = p[3], &x5 = p[4], &x6 = p[5];
  const Rational &y1 = p[6], &y2 = p[7], &y3 = p[8], &y4 = p[9], &y5 = p[10], &y6 = p[11];
  const Rational &z1 = p[12], &z2 = p[13];
  MatQ m(7, 7);
  auto set = [&m](int i, int j, const Rational& v) {
    m.at(i - 1, j - 1) = v;
    m.at(j - 1, i - 1) = -v;
  };
  set(1, 2, x1 + x2);
  set(1, 3, y1 + y2);
  set(1, 4, x3 + x4);
  set(1, 5, y3 + y4);
  set(1, 6, x5 + x6);
  set(1, 7, y5 + y6);
  set(2, 3, z1);
  set(2, 4, -y5);
  set(2, 5, x5);
  set(2, 6, -y3);
  set(2, 7, x3);
  set(3, 4, x6);
  set(3, 5, y6);
  set(3, 6, -x4);
  set(3, 7, -y4);
  set(4, 5, z2);
  set(4, 6, y1);
  set(4, 7, -x1);
  set(5, 6, x2);
  set(5, 7, y2);
  set(6, 7, z1 + z2);
  return m;
}

std::vector<MatQ> g2_basis() {
  std::vector<MatQ> out;
  for (int i = 0; i < 14; ++i) {
    std::vector<Rational> p(14);
    p[i] = Rational(1);
    out.push_back(g2_elem(p));
  }
  return out;
}

MatQ A_perp(const VecQ& v) {
  if (v.size() != 7) throw std::invalid_argument("A_perp: v must have 7 entries");
  MatQ m(7, 7);
  auto set = [&m](int i, int j, const Rational& val) {
    m.at(i - 1, j - 1) = val;
    m.at(j - 1, i - 1) = -val;
  };
  set(1, 2, v[0]);
  set(1, 3, v[1]);
  set(1, 4, v[2]);
  set(1, 5, v[3]);
  set(1, 6, v[4]);
  set(1, 7, v[5]);
  set(2, 3, v[6]);
  set(2, 4, v[5]);
  set(2, 5, -v[4]);
  set(2, 6, v[3]);
  set(2, 7, -v[2]);
  set(3, 4, -v[4]);
  set(3, 5, -v[5]);
  set(3, 6, v[2]);
  set(3, 7, v[3]);
  set(4, 5, v[6]);
  set(4, 6, -v[1]);
  set(4, 7, v[0]);
  set(5, 6, -v[0]);
  set(5, 7, -v[1]);
  set(6, 7, -v[6]);
  return m;
}

MatQ su3_elem(const std::vector<Rational>& p) {
  if (p.size() != 8) throw std::invalid_argument("su3_elem: 8 parameters required");
  const Rational &x1 = p[0], &x3 = p[1], &x5 = p[2];
  const Rational &y1 = p[3], &y3 = p[4], &y5 = p[5];
  const Rational &z1 = p[6], &z2 = p[7];
  // first row and column vanish: x2 = -x1, y2 = -y1, x4 = -x3, y4 = -y3,
  // x6 = -x5, y6 = -y5
  return g2_elem({x1, -x1, x3, -x3, x5, -x5, y1, -y1, y3, -y3, y5, -y5, z1, z2});
}

std::vector<MatQ> su3_basis() {
  std::vector<MatQ> out;
  for (int i = 0; i < 8; ++i) {
    std::vector<Rational> p(8);
    p[i] = Rational(1);
    out.push_back(su3_elem(p));
  }
  return out;
}

MatQ C_perp(const VecQ& z) {
  if (z.size() != 6) throw std::invalid_argument("C_perp: z must have 6 entries");
  MatQ m(7, 7);
  const Rational half(1, 2);
  auto set = [&](int i, int j, const Rational& val) {
    m.at(i - 1, j - 1) = half * val;
    m.at(j - 1, i - 1) = -half * val;
  };
  const Rational two(2);
  set(1, 2, two * z[0]);
  set(1, 3, two * z[1]);
  set(1, 4, two * z[2]);
  set(1, 5, two * z[3]);
  set(1, 6, two * z[4]);
  set(1, 7, two * z[5]);
  set(2, 4, -z[5]);
  set(2, 5, z[4]);
  set(2, 6, -z[3]);
  set(2, 7, z[2]);
  set(3, 4, z[4]);
  set(3, 5, z[5]);
  set(3, 6, -z[2]);
  set(3, 7, -z[3]);
  set(4, 6, z[1]);
  set(4, 7, -z[0]);
  set(5, 6, z[0]);
  set(5, 7, z[1]);
  return m;
}

MatQ direct_sum(const MatQ& a, const MatQ& b) {
  MatQ m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

}  // namespace fatlab::lie::builders
