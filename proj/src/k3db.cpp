#include "wpcas/k3db.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace wpcas {

using json = nlohmann::ordered_json;

void BasketEntry::validate() const {
  if (r < 2 || a <= 0 || b <= 0 || a >= r || b >= r)
    throw std::invalid_argument("basket " + to_string() + ": need 0 < a, b < r");
  if (std::gcd(a, r) != 1) throw std::invalid_argument("basket " + to_string() + ": gcd(a, r) must be 1");
  if ((a + b) % r != 0) throw std::invalid_argument("basket " + to_string() + ": a + b must be divisible by r");
}

std::string BasketEntry::to_string() const {
  return "1/" + std::to_string(r) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void K3Entry::validate() const {
  auto fail = [&](const std::string& why) { throw std::invalid_argument("entry '" + name + "': " + why); };
  if (name.empty()) throw std::invalid_argument("entry without a name");
  if (codimension < 1) fail("codimension must be at least 1");
  if (weights) {
    if (std::any_of(weights->begin(), weights->end(), [](int w) { return w < 1; })) fail("weights must be positive");
    if (static_cast<int>(weights->size()) - 3 != codimension)
      fail("codimension " + std::to_string(codimension) + " does not match " + std::to_string(weights->size()) +
           " weights");
  }
  for (const auto& be : basket) {
    try {
      be.validate();
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  if (numerator) {
    std::set<int> seen;
    for (const auto& [deg, coeff] : *numerator) {
      if (deg < 0) fail("negative numerator degree");
      if (!seen.insert(deg).second) fail("numerator degree " + std::to_string(deg) + " repeated");
    }
  }
  for (const auto& c : centres) {
    for (int t : c.types)
      if (t < 1 || t > 4) fail("projection type " + std::to_string(t) + " outside 1..4");
    if (c.point && std::find(basket.begin(), basket.end(), *c.point) == basket.end())
      fail("centre " + c.point->to_string() + " is not in the basket");
  }
}

DbError::DbError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

BasketEntry basket_from(const json& j) {
  if (!j.is_array() || j.size() != 3 || !std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_number_integer(); }))
    throw std::invalid_argument("basket entries are [r, a, b] integer triples");
  return BasketEntry{j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

json basket_to(const BasketEntry& b) { return json::array({b.r, b.a, b.b}); }

std::vector<int> int_list(const json& j, const char* field) {
  if (!j.is_array()) throw std::invalid_argument(std::string("'") + field + "' must be a list of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument(std::string("'") + field + "' must be a list of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

K3Entry entry_from(const json& j) {
  static const std::set<std::string> known = {"name", "weights", "codimension", "basket", "numerator", "centres", "notes"};
  if (!j.is_object()) throw std::invalid_argument("record must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw std::invalid_argument("unknown field '" + key + "'");
  K3Entry e;
  if (!j.contains("name") || !j["name"].is_string()) throw std::invalid_argument("'name' must be a string");
  e.name = j["name"].get<std::string>();
  if (!j.contains("codimension") || !j["codimension"].is_number_integer())
    throw std::invalid_argument("'codimension' must be an integer");
  e.codimension = j["codimension"].get<int>();
  if (j.contains("weights")) e.weights = int_list(j["weights"], "weights");
  if (j.contains("basket")) {
    if (!j["basket"].is_array()) throw std::invalid_argument("'basket' must be a list");
    for (const auto& b : j["basket"]) e.basket.push_back(basket_from(b));
  }
  if (j.contains("numerator")) {
    if (!j["numerator"].is_array()) throw std::invalid_argument("'numerator' must be a list of [degree, coefficient]");
    e.numerator.emplace();
    for (const auto& p : j["numerator"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
        throw std::invalid_argument("'numerator' must be a list of [degree, coefficient]");
      e.numerator->emplace_back(p[0].get<int>(), p[1].get<long>());
    }
  }
  if (j.contains("centres")) {
    if (!j["centres"].is_array()) throw std::invalid_argument("'centres' must be a list");
    for (const auto& c : j["centres"]) {
      if (!c.is_object() || !c.contains("types")) throw std::invalid_argument("centres need a 'types' list");
      for (const auto& [key, _] : c.items())
        if (key != "point" && key != "types") throw std::invalid_argument("unknown centre field '" + key + "'");
      Centre centre;
      if (c.contains("point")) centre.point = basket_from(c["point"]);
      centre.types = int_list(c["types"], "types");
      e.centres.push_back(std::move(centre));
    }
  }
  if (j.contains("notes")) {
    if (!j["notes"].is_string()) throw std::invalid_argument("'notes' must be a string");
    e.notes = j["notes"].get<std::string>();
  }
  return e;
}

}  // namespace

std::string entry_to_json(const K3Entry& e) {
  json j;
  j["name"] = e.name;
  if (e.weights) j["weights"] = *e.weights;
  j["codimension"] = e.codimension;
  j["basket"] = json::array();
  for (const auto& b : e.basket) j["basket"].push_back(basket_to(b));
  if (e.numerator) {
    j["numerator"] = json::array();
    for (const auto& [d, c] : *e.numerator) j["numerator"].push_back(json::array({d, c}));
  }
  j["centres"] = json::array();
  for (const auto& c : e.centres) {
    json cj;
    if (c.point) cj["point"] = basket_to(*c.point);
    cj["types"] = c.types;
    j["centres"].push_back(cj);
  }
  if (!e.notes.empty()) j["notes"] = e.notes;
  return j.dump();
}

std::vector<K3Entry> load_db(std::istream& in) {
  std::vector<K3Entry> db;
  std::set<std::string> names;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    K3Entry e;
    try {
      e = entry_from(json::parse(line));
      e.validate();
    } catch (const json::parse_error& err) {
      throw DbError(lineno, std::string("malformed JSON: ") + err.what());
    } catch (const std::invalid_argument& err) {
      throw DbError(lineno, err.what());
    }
    if (!names.insert(e.name).second) throw DbError(lineno, "duplicate entry '" + e.name + "'");
    db.push_back(std::move(e));
  }
  return db;
}

std::vector<K3Entry> load_db_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DbError(0, "cannot open database file " + path);
  return load_db(in);
}

void save_db(std::ostream& out, const std::vector<K3Entry>& db) {
  for (const auto& e : db) out << entry_to_json(e) << '\n';
}

std::vector<K3Entry> query(const std::vector<K3Entry>& db, std::optional<int> codimension,
                           std::optional<int> centre_type, std::optional<std::string> name) {
  std::vector<K3Entry> out;
  for (const auto& e : db) {
    if (codimension && e.codimension != *codimension) continue;
    if (name && e.name != *name) continue;
    if (centre_type && std::none_of(e.centres.begin(), e.centres.end(), [&](const Centre& c) {
          return std::find(c.types.begin(), c.types.end(), *centre_type) != c.types.end();
        }))
      continue;
    out.push_back(e);
  }
  return out;
}

const std::vector<Centre>& centres(const K3Entry& e) { return e.centres; }

std::string describe(const K3Entry& e) {
  std::ostringstream os;
  os << e.name << "\n  codimension: " << e.codimension << "\n";
  if (e.weights) {
    os << "  ambient: P(";
    for (std::size_t i = 0; i < e.weights->size(); ++i) os << (i ? "," : "") << (*e.weights)[i];
    os << ")\n";
  }
  os << "  basket: [";
  for (std::size_t i = 0; i < e.basket.size(); ++i) os << (i ? ", " : "") << e.basket[i].to_string();
  os << "]\n";
  if (e.numerator) {
    os << "  numerator:";
    bool first = true;
    for (const auto& [d, c] : *e.numerator) {
      if (first)
        os << (c < 0 ? " -" : " ");
      else
        os << (c < 0 ? " - " : " + ");
      const long mag = std::labs(c);
      if (d == 0 || mag != 1) os << mag;
      if (d > 0) os << "t" << (d > 1 ? "^" + std::to_string(d) : "");
      first = false;
    }
    os << " + ...\n";
  }
  for (const auto& c : e.centres) {
    os << "  centre: " << (c.point ? c.point->to_string() : std::string("unspecified")) << " types [";
    for (std::size_t i = 0; i < c.types.size(); ++i) os << (i ? "," : "") << c.types[i];
    os << "]\n";
  }
  if (!e.notes.empty()) os << "  notes: " << e.notes << "\n";
  return os.str();
}

}  // namespace wpcas
