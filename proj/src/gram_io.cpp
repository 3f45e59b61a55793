#include "lattk/gram_io.hpp"

#include <json.hpp>

#include "lattk/checks.hpp"
#include "lattk/k3.hpp"

namespace lattk {

using nlohmann::json;

Rat parse_rational_string(const std::string& s) {
  auto fail = [&](const std::string& why) -> Rat {
    throw ParseError("bad rational \"" + s + "\": " + why);
  };
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  auto digits = [](const std::string& t, bool sign_ok) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (sign_ok && t[0] == '-') i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!digits(num, true) || !digits(den, false)) return fail("expected p or p/q");
  Int p(num), q(den);
  if (q == 0) return fail("zero denominator");
  if (s.find('/') != std::string::npos) {
    if (q == 1) return fail("denominator 1 must be written without /q");
    if (int_gcd(abs(p), q) != 1) return fail("not in lowest terms");
  }
  return make_rat(p, q);
}

namespace {

Rat entry_from_json(const json& v, std::size_t i, std::size_t j) {
  auto where = " at gram[" + std::to_string(i) + "][" + std::to_string(j) + "]";
  if (v.is_number_float()) throw ParseError("floating point entry rejected" + where);
  if (v.is_number_unsigned()) return Rat(Int(std::to_string(v.get<std::uint64_t>())));
  if (v.is_number_integer()) return Rat(Int(std::to_string(v.get<std::int64_t>())));
  if (v.is_string()) return parse_rational_string(v.get<std::string>());
  throw ParseError("entry must be an integer or a \"p/q\" string" + where);
}

json entry_to_json(const Rat& v) {
  if (is_integral(v) && fits_int64(v.get_num())) return to_int64(v.get_num());
  return rat_string(v);
}

}  // namespace

GramFile parse_gram_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top level must be an object");
  if (!j.contains("rank") || !j["rank"].is_number_integer() || j["rank"].get<std::int64_t>() < 0)
    throw ParseError("missing or invalid \"rank\"");
  const std::size_t n = j["rank"].get<std::size_t>();
  if (!j.contains("gram") || !j["gram"].is_array() || j["gram"].size() != n)
    throw ParseError("\"gram\" must be a rank x rank array");

  GramFile f;
  f.rank = n;
  f.gram = RatMat(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = j["gram"][i];
    if (!row.is_array() || row.size() != n)
      throw ParseError("\"gram\" row " + std::to_string(i) + " has wrong length");
    for (std::size_t k = 0; k < n; ++k) f.gram.at(i, k) = entry_from_json(row[k], i, k);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      if (f.gram.at(i, k) != f.gram.at(k, i))
        throw ParseError("gram matrix is not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(k) + ")");
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || j["labels"].size() != n)
      throw ParseError("\"labels\" must list one name per basis vector");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      f.labels.push_back(l.get<std::string>());
    }
  }
  return f;
}

std::string serialize_gram_file(const GramFile& f) {
  json j;
  j["rank"] = f.rank;
  json gram = json::array();
  for (std::size_t i = 0; i < f.rank; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < f.rank; ++k) row.push_back(entry_to_json(f.gram.at(i, k)));
    gram.push_back(row);
  }
  j["gram"] = gram;
  if (!f.labels.empty()) j["labels"] = f.labels;
  return canonical_json(j);
}

const std::vector<std::string>& exportable_names() {
  static const std::vector<std::string> names{"U",     "E8minus",    "K3", "Mukai",
                                              "PicSP", "TwistedAlg", "TX"};
  return names;
}

namespace {

GramFile from_lattice(const Lattice& l, std::vector<std::string> labels) {
  GramFile f;
  f.rank = l.rank();
  f.gram = RatMat::from_int(l.gram);
  f.labels = std::move(labels);
  return f;
}

}  // namespace

GramFile builtin_gram_file(const std::string& name) {
  if (name == "U" || name == "E8minus" || name == "K3" || name == "Mukai") {
    StandardLattice which = name == "U"         ? StandardLattice::U
                            : name == "E8minus" ? StandardLattice::E8minus
                            : name == "K3"      ? StandardLattice::K3
                                                : StandardLattice::Mukai;
    return from_lattice(standard_lattice(which), standard_labels(which));
  }
  if (name == "PicSP") {
    return from_lattice(Lattice(IntMat::from_ints({{2, 0}, {0, -2}})), {"h", "s"});
  }
  BFieldParams p{make_rat(1, 2), make_rat(1, 2), make_rat(1, 2)};
  if (name == "TwistedAlg") {
    return from_lattice(twisted_generator_gram(p), {"2e0+2B", "h", "s", "e4"});
  }
  if (name == "TX") {
    ConcreteBField b = realize_bfield(p);
    return from_lattice(transcendental_models(b).tx.sublattice(), {});
  }
  throw DomainError("unknown builtin lattice: " + name);
}

}  // namespace lattk
