#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvature.hpp"
#include "einstein.hpp"
#include "metric.hpp"
#include "repthy.hpp"

namespace liegeom::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "liegeom/1";
inline constexpr const char* kVersion = "0.1.0";

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string csv_cell(const std::optional<double>& v) { return v ? fmt17(*v) : "."; }

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

namespace detail {

inline bool is_scalar(const json& j) { return !j.is_array() && !j.is_object(); }

inline void write(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' '), inner = pad + "  ";
  if (j.is_number_float()) {
    double v = j.get<double>();
    os << (std::isfinite(v) ? fmt17(v) : "null");
  } else if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << inner << json(it.key()).dump() << ": ";
      write(os, it.value(), indent + 1);
    }
    os << "\n" << pad << "}";
  } else if (j.is_array()) {
    bool flat = std::all_of(j.begin(), j.end(), is_scalar);
    if (j.empty() || flat) {
      os << "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ", ";
        write(os, j[i], indent + 1);
      }
      os << "]";
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) os << ",\n";
      os << inner;
      write(os, j[i], indent + 1);
    }
    os << "\n" << pad << "]";
  } else {
    os << j.dump();
  }
}

}  // namespace detail

/// Pretty JSON with floats at 17 significant digits; flat arrays stay on one line.
inline std::string dump17(const json& j) {
  std::ostringstream os;
  detail::write(os, j, 0);
  os << "\n";
  return os.str();
}

template <class M>
json matrix(const M& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline json params_object(Family f, const std::vector<double>& p) {
  json o = json::object();
  const auto& names = family_info(f).params;
  for (std::size_t k = 0; k < p.size(); ++k) o[names[k]] = p[k];
  return o;
}

inline json to_json(const EinsteinSolution& s) {
  json j;
  j["family"] = to_string(s.family);
  j["params"] = params_object(s.family, s.params);
  j["kappa"] = s.kappa;
  j["lambda"] = s.lambda_cc;
  j["tau"] = s.tau;
  j["signature"] = {s.p, s.q};
  j["stabilizer_dim"] = s.stabilizer_dim;
  j["residual"] = s.residual;
  j["hits"] = s.hits;
  return j;
}

inline json to_json(const CertificateReport& r) {
  json j;
  j["status"] = r.pass ? "PASS" : "FAIL";
  json items = json::array();
  for (const auto& it : r.items)
    items.push_back({{"polynomial", it.id},
                     {"value", it.root.value},
                     {"residual", it.root.residual},
                     {"refined", it.root.refined},
                     {"displacement", it.root.displacement},
                     {"iterations", it.root.iterations},
                     {"pass", it.root.pass}});
  j["items"] = items;
  j["beta_closed_form_error"] = r.beta_closed_form_error;
  j["kappa_closed_form_error"] = r.kappa_closed_form_error;
  return j;
}

/// Upper-triangular sectional table with "." for a >= b and undefined planes.
inline std::string sectional_csv(const SectionalTable& t) {
  std::ostringstream os;
  os << "a";
  for (int b = 2; b <= N; ++b) os << ",X" << b;
  os << "\n";
  for (int a = 0; a < N - 1; ++a) {
    os << "X" << a + 1;
    for (int b = 1; b < N; ++b) os << "," << (b > a ? csv_cell(t(a, b)) : std::string("."));
    os << "\n";
  }
  return os.str();
}

inline json sectional_json(const SectionalTable& t) {
  json rows = json::array();
  for (int a = 0; a < N; ++a) {
    json r = json::array();
    for (int b = 0; b < N; ++b) {
      auto v = b > a ? t(a, b) : std::nullopt;
      r.push_back(v ? json(*v) : json(nullptr));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace liegeom::io
