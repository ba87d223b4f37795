#include "logmod/jsonio.hpp"

namespace logmod {

Json cyc_to_json(const CycNum& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) {
    coeffs.push_back(Json::array({c.get_num().get_str(), c.get_den().get_str()}));
  }
  return Json{{"order", x.field()->order()}, {"coeffs", coeffs}};
}

CycNum cyc_from_json(const Json& j) {
  long long n = j.at("order").get<long long>();
  auto f = CycField::get(n);
  std::vector<Rat> c;
  for (const auto& pair : j.at("coeffs")) {
    Int num(pair.at(0).get<std::string>());
    Int den(pair.at(1).get<std::string>());
    Rat v(num, den);
    v.canonicalize();
    c.push_back(v);
  }
  return CycNum(f, std::move(c));
}

Json intmat_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

IntMat intmat_from_json(const Json& j) {
  int rows = static_cast<int>(j.size());
  int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m.at(i, c) = Int(j.at(i).at(c).get<std::string>());
  return m;
}

Json weight_to_json(const Weight& w) {
  Json a = Json::array();
  for (auto v : w) a.push_back(v);
  return a;
}

Weight weight_from_json(const Json& j) {
  Weight w;
  for (const auto& v : j) w.push_back(v.get<long long>());
  return w;
}

}  // namespace logmod
