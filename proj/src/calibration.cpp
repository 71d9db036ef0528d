#include "treelabel/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "treelabel/approx_scheme.hpp"
#include "treelabel/bitcodec.hpp"
#include "treelabel/errors.hpp"

namespace treelabel {

namespace {

double clog(double v) { return v <= 1 ? 0.0 : std::ceil(std::log2(v)); }

}  // namespace

Budgets Budgets::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open calibration file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    const auto doc = nlohmann::json::parse(ss.str());
    Budgets b;
    b.exact_C = doc.at("exact_C").get<double>();
    b.nca_C = doc.at("nca_C").get<double>();
    b.approx_c = doc.at("approx_c").get<double>();
    b.caterpillar_c = doc.at("caterpillar_c").get<double>();
    b.caterpillar_c_prime = doc.at("caterpillar_c_prime").get<double>();
    b.path_c = doc.at("path_c").get<double>();
    return b;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("calibration file " + path + ": " + e.what());
  }
}

Budgets Budgets::load_default() { return load(TREELABEL_CALIBRATION_FILE); }

double Budgets::exact(unsigned B) const {
  return 0.5 * B * B + exact_C * B * std::max(1.0, clog(B));
}

double Budgets::nca(unsigned B) const { return nca_C * B * std::max(1.0, clog(B)); }

double Budgets::approx(unsigned B, double eps) const {
  return approx_c + B + nca(B) + approx_s_budget(B, eps);
}

double Budgets::caterpillar(unsigned B) const {
  return 2.0 * B - clog(B) + caterpillar_c * clog(clog(B)) + caterpillar_c_prime;
}

double Budgets::path(std::size_t k, std::uint64_t n) const {
  const double kd = static_cast<double>(k);
  return (kd - 1) / kd * clog(2.0 * static_cast<double>(n)) + clog(kd) +
         2 * clog(clog(kd)) + path_c;
}

double exact_list_budget(unsigned B) { return 0.5 * B * B + 0.5 * B; }

double approx_s_budget(unsigned B, double eps) {
  ThresholdSchedule schedule(quantize_eps(eps));
  const std::uint64_t limit = std::uint64_t{1} << B;
  std::size_t j = 0;
  while (schedule.threshold(j) < limit) ++j;
  return static_cast<double>(B) + static_cast<double>(j);
}

double path_floor(std::size_t k, std::uint64_t n) {
  const double kd = static_cast<double>(k);
  return (kd - 1) / kd * std::log2(static_cast<double>(n)) + std::log2(kd);
}

double caterpillar_floor(std::uint64_t n) {
  const unsigned lg = floor_log2(std::max<std::uint64_t>(n, 1));
  return 2.0 * lg - floor_log2(std::max(lg, 1u)) - 4.0;
}

}  // namespace treelabel
