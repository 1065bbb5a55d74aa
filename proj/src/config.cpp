#include "qd/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qd {

bool JobConfig::has(const std::string& sec, const std::string& key) const {
  auto s = sections.find(sec);
  return s != sections.end() && s->second.count(key) > 0;
}

std::string JobConfig::get(const std::string& sec, const std::string& key,
                           const std::string& fallback) const {
  auto s = sections.find(sec);
  if (s == sections.end()) return fallback;
  auto k = s->second.find(key);
  return k == s->second.end() ? fallback : k->second;
}

long JobConfig::get_int(const std::string& sec, const std::string& key, long fallback) const {
  std::string v = get(sec, key);
  if (v.empty()) return fallback;
  try {
    return std::stol(v);
  } catch (const std::exception&) {
    throw std::invalid_argument("config value " + sec + "." + key + " is not an integer: " + v);
  }
}

JobConfig JobConfig::parse(std::istream& in) {
  JobConfig cfg;
  std::string current = "global";
  std::string tok;
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    while (ls >> tok) {
      if (tok.size() >= 2 && tok.front() == '[' && tok.back() == ']') {
        current = tok.substr(1, tok.size() - 2);
        continue;
      }
      size_t eq = tok.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("config token is not key=value: " + tok);
      cfg.sections[current][tok.substr(0, eq)] = tok.substr(eq + 1);
    }
  }
  return cfg;
}

JobConfig JobConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  return parse(in);
}

JobConfig JobConfig::parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

void JobConfig::override_params(const std::string& csv) {
  size_t pos = 0;
  while (pos < csv.size()) {
    size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    std::string tok = csv.substr(pos, comma - pos);
    if (!tok.empty()) {
      size_t eq = tok.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("--params entries must be key=value: " + tok);
      sections["params"][tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    pos = comma + 1;
  }
}

FiniteGroup JobConfig::group_from_label(const std::string& label) {
  if (label == "s3" || label == "S3" || label == "symmetric3") return FiniteGroup::symmetric3();
  size_t colon = label.find(':');
  std::string fam = colon == std::string::npos ? label : label.substr(0, colon);
  int n = colon == std::string::npos ? 0 : std::stoi(label.substr(colon + 1));
  if (fam == "dicyclic") return FiniteGroup::dicyclic(n);
  if (fam == "cyclic") return FiniteGroup::cyclic(n);
  throw std::invalid_argument("unknown group: " + label + " (use dicyclic:N, cyclic:N or s3)");
}

FiniteGroup JobConfig::group() const {
  std::string fam = get("group", "family");
  if (fam.empty()) throw std::invalid_argument("config is missing [group] family=...");
  if (fam.find(':') != std::string::npos || fam == "s3") return group_from_label(fam);
  long n = get_int("group", "n", 0);
  if (fam == "dicyclic") return FiniteGroup::dicyclic(static_cast<int>(n));
  if (fam == "cyclic") return FiniteGroup::cyclic(static_cast<int>(n));
  if (fam == "symmetric3") return FiniteGroup::symmetric3();
  throw std::invalid_argument("unknown group family: " + fam);
}

FamilyParams JobConfig::params() const {
  FamilyParams p;
  p.alpha = static_cast<int>(get_int("params", "alpha", 1));
  p.beta = static_cast<int>(get_int("params", "beta", 1));
  p.gamma = static_cast<int>(get_int("params", "gamma", 1));
  auto cyc = [&](const char* key, const Cyclotomic& fallback) {
    std::string v = get("params", key);
    return v.empty() ? fallback : Cyclotomic::parse(v);
  };
  p.u1 = cyc("u1", Cyclotomic(1));
  p.u2 = cyc("u2", Cyclotomic(1));
  p.u3 = cyc("u3", Cyclotomic(1));
  p.u4 = cyc("u4", Cyclotomic(1));
  return p;
}

std::string JobConfig::algebra_family() const {
  std::string fam = get("algebra", "family");
  if (fam.empty()) throw std::invalid_argument("config is missing [algebra] family=...");
  return fam;
}

AlgebraPresentation JobConfig::algebra() const {
  std::string fam = algebra_family();
  if (fam == "D4" || fam == "d4") return d4_algebra(params());
  if (fam == "D8" || fam == "d8") return d8_algebra(params());
  if (fam.rfind("S3:", 0) == 0 || fam.rfind("s3:", 0) == 0)
    return s3_candidate(std::stoi(fam.substr(3)));
  throw std::invalid_argument("unknown algebra family: " + fam + " (use D4, D8 or S3:2..S3:5)");
}

int JobConfig::degree_limit(int fallback) const {
  return static_cast<int>(get_int("limits", "degree", fallback));
}

}  // namespace qd
