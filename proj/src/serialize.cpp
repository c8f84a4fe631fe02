#include "cycinv/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "cycinv/errors.hpp"

namespace cycinv {

std::string to_string(Convention c) { return c == Convention::Ideal ? "ideal" : "quotient"; }

std::string to_string(GradingKind g) {
  return g == GradingKind::PolynomialDegree ? "polynomial-degree" : "weighted-degree";
}

nlohmann::ordered_json to_json(const BettiTable& table) {
  nlohmann::ordered_json j;
  j["convention"] = to_string(table.convention());
  j["grading"] = to_string(table.grading());
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& [key, rank] : table.entries())
    j["entries"].push_back({{"i", key.first}, {"j", key.second}, {"rank", rank}});
  return j;
}

BettiTable betti_from_json(const nlohmann::ordered_json& j) {
  try {
    const auto conv = j.at("convention").get<std::string>();
    const auto grading = j.at("grading").get<std::string>();
    if (conv != "ideal" && conv != "quotient") throw ValidationError("unknown convention '" + conv + "'");
    if (grading != "polynomial-degree" && grading != "weighted-degree")
      throw ValidationError("unknown grading '" + grading + "'");
    BettiTable t(conv == "ideal" ? Convention::Ideal : Convention::Quotient,
                 grading == "polynomial-degree" ? GradingKind::PolynomialDegree : GradingKind::WeightedDegree);
    for (const auto& e : j.at("entries")) {
      const auto rank = e.at("rank").get<std::int64_t>();
      if (rank <= 0) throw ValidationError("Betti entries must have positive rank");
      t.add(e.at("i").get<int>(), e.at("j").get<std::int64_t>(), rank);
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("Betti table JSON: ") + e.what());
  }
}

std::string format_grid(const BettiTable& table) {
  std::set<std::int64_t> degrees;
  for (const auto& [key, rank] : table.entries()) degrees.insert(key.second);
  const auto rows = table.indices();

  std::size_t width = 1;
  for (auto d : degrees) width = std::max(width, std::to_string(d).size());
  for (const auto& [key, rank] : table.entries()) width = std::max(width, std::to_string(rank).size());

  std::vector<std::string> labels;
  std::size_t label_width = 2;
  for (int i : rows) {
    labels.push_back("beta_{" + std::to_string(i) + ",j}:");
    label_width = std::max(label_width, labels.back().size());
  }

  std::ostringstream os;
  os << std::setw(static_cast<int>(label_width)) << "j:";
  for (auto d : degrees) os << ' ' << std::setw(static_cast<int>(width)) << d;
  os << '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string line;
    {
      std::ostringstream ls;
      ls << std::setw(static_cast<int>(label_width)) << labels[r];
      for (auto d : degrees) {
        const auto v = table.at(rows[r], d);
        ls << ' ' << std::setw(static_cast<int>(width)) << (v ? std::to_string(v) : "");
      }
      line = ls.str();
    }
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << '\n';
  }
  return os.str();
}

namespace {

std::vector<std::string> generator_names(const GeneratorSet& gens) {
  std::vector<std::string> names;
  const std::string prefix = gens.is_3d() ? "b" : "u";
  int k = 1;
  for (const auto& g : gens.ordered()) names.push_back(g.block == Block::A ? "a" : prefix + std::to_string(k++));
  return names;
}

}  // namespace

nlohmann::ordered_json to_json(const GeneratorSet& gens) {
  nlohmann::ordered_json j;
  j["n"] = gens.weights().order();
  j["weights"] = gens.weights().weights();
  j["m"] = gens.m();
  if (gens.blocks()) j["blocks"] = {{"r", gens.blocks()->r}, {"s", gens.blocks()->s}, {"t", gens.blocks()->t}};
  j["generators"] = nlohmann::ordered_json::array();
  const auto names = generator_names(gens);
  const auto coords = gens.coordinate_names();
  for (std::size_t k = 0; k < gens.ordered().size(); ++k) {
    const auto& g = gens.ordered()[k];
    std::vector<std::int64_t> exps(g.image.exponents().data(), g.image.exponents().data() + g.image.size());
    j["generators"].push_back({{"name", names[k]},
                               {"monomial", g.image.to_string(coords, "")},
                               {"exponents", exps},
                               {"degree", g.degree},
                               {"block", to_string(g.block)}});
  }
  return j;
}

std::string format_generators(const GeneratorSet& gens) {
  std::ostringstream os;
  const auto names = generator_names(gens);
  const auto coords = gens.coordinate_names();
  os << gens.weights().to_string() << ": " << gens.ordered().size() << " minimal generators";
  if (gens.blocks()) os << " (m = " << gens.m() << ", r = " << gens.blocks()->r << ", s = " << gens.blocks()->s
                        << ", t = " << gens.blocks()->t << ")";
  os << '\n';
  for (std::size_t k = 0; k < gens.ordered().size(); ++k) {
    const auto& g = gens.ordered()[k];
    os << names[k] << " = " << g.image.to_string(coords, "") << "  (degree " << g.degree << ")\n";
  }
  return os.str();
}

}  // namespace cycinv
