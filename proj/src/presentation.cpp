#include "qgal/presentation.hpp"

#include <sstream>
#include <stdexcept>

#include "qgal/parser.hpp"

namespace qgal {

Presentation::Presentation(std::string name, std::vector<std::string> gen_names,
                           std::vector<std::string> gen_names_unicode,
                           std::vector<int> gen_weights,
                           std::optional<int> a_order)
    : name_(std::move(name)),
      gen_names_(std::move(gen_names)),
      gen_names_unicode_(std::move(gen_names_unicode)),
      gen_weights_(std::move(gen_weights)),
      a_order_(a_order) {
  if (gen_names_.empty())
    throw std::invalid_argument("presentation needs at least one generator");
  if (gen_names_unicode_.size() != gen_names_.size() ||
      gen_weights_.size() != gen_names_.size())
    throw std::invalid_argument("generator metadata size mismatch");
  if (a_order_ && *a_order_ < 0)
    throw std::invalid_argument("negative a-truncation order");
}

int Presentation::gen_index(const std::string& name) const {
  for (size_t i = 0; i < gen_names_.size(); ++i)
    if (gen_names_[i] == name || gen_names_unicode_[i] == name)
      return static_cast<int>(i);
  return -1;
}

void Presentation::set_rule(int j, int i, const NCElement& rhs) {
  if (!(j > i && i >= 0 && j < num_gens()))
    throw std::invalid_argument("rule indices must satisfy j > i");
  if (rhs.pres() != this)
    throw std::logic_error("rule right-hand side built on a different "
                           "presentation");
  rules_[{j, i}] = rhs;
  straighten_cache_.clear();
}

const NCElement& Presentation::rule(int j, int i) const {
  auto it = rules_.find({j, i});
  if (it == rules_.end())
    throw std::logic_error("missing rewrite rule for generator pair (" +
                           gen_names_[j] + ", " + gen_names_[i] + ")");
  return it->second;
}

void Presentation::set_structure_maps(std::vector<Tensor2> coproducts,
                                      std::vector<CoeffPoly> counits,
                                      std::vector<NCElement> antipodes) {
  size_t n = gen_names_.size();
  if (coproducts.size() != n || counits.size() != n || antipodes.size() != n)
    throw std::invalid_argument("structure map count mismatch");
  coproducts_ = std::move(coproducts);
  counits_ = std::move(counits);
  antipodes_ = std::move(antipodes);
  has_structure_maps_ = true;
}

const Tensor2& Presentation::gen_coproduct(int i) const {
  if (!has_structure_maps_)
    throw std::logic_error("presentation has no structure maps yet");
  return coproducts_.at(i);
}

const CoeffPoly& Presentation::gen_counit(int i) const {
  if (!has_structure_maps_)
    throw std::logic_error("presentation has no structure maps yet");
  return counits_.at(i);
}

const NCElement& Presentation::gen_antipode(int i) const {
  if (!has_structure_maps_)
    throw std::logic_error("presentation has no structure maps yet");
  return antipodes_.at(i);
}

void Presentation::validate() const {
  for (int j = 0; j < num_gens(); ++j)
    for (int i = 0; i < j; ++i) {
      const NCElement& rhs = rule(j, i);
      if (a_order_) {
        auto d = rhs.a_max_degree();
        if (d && *d > *a_order_)
          throw std::logic_error("rule right-hand side violates the "
                                 "a-truncation invariant");
      }
    }
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  os << "presentation " << name_ << "\n";
  if (a_order_)
    os << "a-order " << *a_order_ << "\n";
  else
    os << "a-order exact\n";
  os << "a-weight " << a_weight_ << "\n";
  os << "generators";
  for (const auto& g : gen_names_) os << " " << g;
  os << "\n";
  os << "weights";
  for (int w : gen_weights_) os << " " << w;
  os << "\n";
  for (const auto& [key, rhs] : rules_) {
    os << "rule " << gen_names_[key.first] << "*" << gen_names_[key.second]
       << " -> " << rhs.to_string() << "\n";
  }
  if (has_structure_maps_) {
    for (int i = 0; i < num_gens(); ++i)
      os << "coproduct " << gen_names_[i] << " -> "
         << coproducts_[i].to_string() << "\n";
    for (int i = 0; i < num_gens(); ++i)
      os << "counit " << gen_names_[i] << " -> " << counits_[i].to_string()
         << "\n";
    for (int i = 0; i < num_gens(); ++i)
      os << "antipode " << gen_names_[i] << " -> "
         << antipodes_[i].to_string() << "\n";
  }
  os << "end\n";
  return os.str();
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace

std::unique_ptr<Presentation> parse_presentation(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::string name;
  std::optional<int> a_order;
  bool a_order_seen = false;
  int a_weight = 2;
  std::vector<std::string> gens;
  std::vector<int> weights;

  auto fail = [](const std::string& msg) {
    throw std::invalid_argument("presentation document: " + msg);
  };

  // Header lines, in fixed order.
  std::vector<std::string> header_lines;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto words = split_ws(line);
    if (words.empty()) continue;
    if (words[0] == "presentation") {
      if (words.size() != 2) fail("malformed presentation line");
      name = words[1];
    } else if (words[0] == "a-order") {
      if (words.size() != 2) fail("malformed a-order line");
      a_order_seen = true;
      if (words[1] != "exact") a_order = std::stoi(words[1]);
    } else if (words[0] == "a-weight") {
      if (words.size() != 2) fail("malformed a-weight line");
      a_weight = std::stoi(words[1]);
    } else if (words[0] == "generators") {
      gens.assign(words.begin() + 1, words.end());
    } else if (words[0] == "weights") {
      for (size_t i = 1; i < words.size(); ++i)
        weights.push_back(std::stoi(words[i]));
      break;  // body follows
    } else {
      fail("unexpected line before weights: " + line);
    }
  }
  if (name.empty() || !a_order_seen || gens.empty() ||
      weights.size() != gens.size())
    fail("incomplete header");

  // Unicode display names for the known built-ins; identity otherwise.
  std::vector<std::string> unicode = gens;
  for (auto& g : unicode)
    if (g == "mu") g = "μ";

  auto pres = std::make_unique<Presentation>(name, gens, unicode, weights,
                                             a_order);
  pres->set_a_weight(a_weight);

  std::vector<Tensor2> cops;
  std::vector<CoeffPoly> counits;
  std::vector<NCElement> antipodes;
  bool saw_maps = false;
  bool saw_end = false;

  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto arrow = line.find(" -> ");
    auto words = split_ws(line.substr(0, arrow));
    if (words.empty()) continue;
    if (words[0] == "end") {
      saw_end = true;
      break;
    }
    if (arrow == std::string::npos) fail("missing '->' in: " + line);
    std::string rhs_text = line.substr(arrow + 4);
    if (words[0] == "rule") {
      if (words.size() != 2) fail("malformed rule line");
      auto star = words[1].find('*');
      if (star == std::string::npos) fail("malformed rule left-hand side");
      int j = pres->gen_index(words[1].substr(0, star));
      int i = pres->gen_index(words[1].substr(star + 1));
      if (j < 0 || i < 0) fail("unknown generator in rule");
      pres->set_rule(j, i, parse_element(rhs_text, *pres));
    } else if (words[0] == "coproduct" || words[0] == "counit" ||
               words[0] == "antipode") {
      if (words.size() != 2) fail("malformed structure map line");
      int g = pres->gen_index(words[1]);
      if (g < 0) fail("unknown generator in structure map");
      saw_maps = true;
      if (words[0] == "coproduct") {
        if (static_cast<int>(cops.size()) != g)
          fail("structure maps out of order");
        cops.push_back(parse_tensor(rhs_text, *pres));
      } else if (words[0] == "counit") {
        if (static_cast<int>(counits.size()) != g)
          fail("structure maps out of order");
        NCElement e = parse_element(rhs_text, *pres);
        for (const auto& [m, c] : e.terms())
          if (mono_degree(m) != 0) fail("counit value must be scalar");
        counits.push_back(e.unit_coefficient());
      } else {
        if (static_cast<int>(antipodes.size()) != g)
          fail("structure maps out of order");
        antipodes.push_back(parse_element(rhs_text, *pres));
      }
    } else {
      fail("unexpected line: " + line);
    }
  }
  if (!saw_end) fail("missing end line");
  pres->validate();
  if (saw_maps) {
    size_t n = gens.size();
    if (cops.size() != n || counits.size() != n || antipodes.size() != n)
      fail("incomplete structure maps");
    pres->set_structure_maps(std::move(cops), std::move(counits),
                             std::move(antipodes));
  }
  return pres;
}

}  // namespace qgal
