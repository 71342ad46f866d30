// Copyright 2026 The picard-range Authors
// SPDX-License-Identifier: Apache-2.0

#include "picard/serialize.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "picard/murty.hpp"

namespace picard {
namespace {

using Json = nlohmann::ordered_json;

Json decomposition_object(const Decomposition& d) {
  Json blocks = Json::array();
  for (const Block& b : d.blocks) {
    blocks.push_back(Json{{"m", b.m()},
                          {"k", b.k()},
                          {"kind", std::string(to_string(b.endo().kind()))},
                          {"param", b.endo().param()},
                          {"rho", b.rho()}});
  }
  return Json{{"g", d.g}, {"rho", d.total_rho()}, {"blocks", std::move(blocks)}};
}

std::string run_text(const std::vector<Value>& xs) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  auto emit = [&](const std::string& s) {
    os << (first ? "" : ", ") << s;
    first = false;
  };
  for (std::size_t i = 0; i < xs.size();) {
    std::size_t j = i;
    while (j + 1 < xs.size() && xs[j + 1] == xs[j] + 1) ++j;
    if (j - i >= 2) {
      emit(std::to_string(xs[i]));
      emit("...");
      emit(std::to_string(xs[j]));
    } else {
      for (std::size_t t = i; t <= j; ++t) emit(std::to_string(xs[t]));
    }
    i = j + 1;
  }
  os << '}';
  return os.str();
}

}  // namespace

std::string set_to_json(const PicardSet& s) {
  return Json{{"g", s.dim()}, {"members", s.members()}}.dump() + "\n";
}

std::string set_to_csv(const PicardSet& s) {
  std::string out = "rho\n";
  s.for_each([&out](Value x) { out += std::to_string(x) + "\n"; });
  return out;
}

std::string set_to_text(const PicardSet& s) { return run_text(s.members()) + "\n"; }

std::string gaps_to_text(const std::vector<GapInterval>& gaps) {
  std::string out;
  for (const GapInterval& gap : gaps) out += std::to_string(gap.lo) + "-" + std::to_string(gap.hi) + "\n";
  return out;
}

std::string decomposition_to_json(const Decomposition& d) { return decomposition_object(d).dump() + "\n"; }

std::string certificate_with_shapes_to_json(const Decomposition& d, const ShapeEnumeration& shapes) {
  Json obj = decomposition_object(d);
  Json list = Json::array();
  for (const Shape& shape : shapes.shapes) {
    Json one = Json::array();
    for (const ShapeBlock& b : shape) one.push_back(Json{{"m", b.m}, {"k", b.k}, {"rho", b.rho}});
    list.push_back(std::move(one));
  }
  obj["shapes"] = std::move(list);
  obj["truncated"] = shapes.truncated;
  return obj.dump() + "\n";
}

Decomposition decomposition_from_json(std::string_view text) {
  Json obj;
  try {
    obj = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("decomposition: malformed JSON: ") + e.what());
  }
  try {
    Decomposition d;
    d.g = obj.at("g").get<int>();
    const Value rho = obj.at("rho").get<Value>();
    for (const Json& b : obj.at("blocks")) {
      const auto kind = parse_endo_kind(b.at("kind").get<std::string>());
      if (!kind) throw std::invalid_argument("decomposition: unknown kind");
      const int m = b.at("m").get<int>();
      const auto endo = EndoClass::realizable(*kind, b.at("param").get<std::int64_t>(), m);
      if (!endo) throw std::invalid_argument("decomposition: block is not realizable");
      Block block(m, b.at("k").get<int>(), *endo);
      if (block.rho() != b.at("rho").get<Value>()) throw std::invalid_argument("decomposition: block rho mismatch");
      d.blocks.push_back(block);
    }
    if (!d.is_consistent()) throw std::invalid_argument("decomposition: dimensions do not sum to g");
    if (d.total_rho() != rho) throw std::invalid_argument("decomposition: total rho mismatch");
    return d;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("decomposition: ") + e.what());
  }
}

std::string density_to_csv(const std::vector<DensityRow>& rows) {
  std::ostringstream os;
  os << kDensityCsvHeader << '\n';
  for (const DensityRow& r : rows) {
    os << r.g << ',' << r.count << ',' << r.g_squared << ',' << r.density.num << ',' << r.density.den << '\n';
  }
  return os.str();
}

std::string density_to_text(const std::vector<DensityRow>& rows) {
  std::ostringstream os;
  os << std::setw(6) << "g" << std::setw(10) << "count" << std::setw(12) << "g^2" << std::setw(12) << "density"
     << '\n';
  for (const DensityRow& r : rows) {
    os << std::setw(6) << r.g << std::setw(10) << r.count << std::setw(12) << r.g_squared << std::setw(12)
       << std::fixed << std::setprecision(6) << r.density.to_double() << '\n';
  }
  return os.str();
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream os;
  for (const Check& c : report.checks) {
    os << "g=" << report.g << '\t' << c.name << '\t' << (!c.applicable ? "N/A" : c.passed ? "PASS" : "FAIL") << '\t'
       << c.detail << '\n';
  }
  return os.str();
}

std::string distribution_to_text(const DistributionCheck& check) {
  std::ostringstream os;
  os << (check.holds ? "true" : "false") << '\n';
  os << "g=" << check.g << " ell=" << check.ell << '\n';
  os << "window: " << run_text(check.window) << '\n';
  os << "translates: " << run_text(check.translates) << '\n';
  os << "disjoint: " << (check.disjoint ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace picard
