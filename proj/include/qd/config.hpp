#pragma once

#include "qd/ncalg.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace qd {

/// Flat sectioned key-value configuration, e.g.
///   [group] family=dicyclic n=2
///   [params] alpha=1 beta=1 gamma=-1 u1=1 u2=1 u3=1 u4=1
///   [limits] degree=8
struct JobConfig {
  std::map<std::string, std::map<std::string, std::string>> sections;

  bool has(const std::string& sec, const std::string& key) const;
  std::string get(const std::string& sec, const std::string& key,
                  const std::string& fallback = "") const;
  long get_int(const std::string& sec, const std::string& key, long fallback) const;

  static JobConfig parse(std::istream& in);
  static JobConfig parse_file(const std::string& path);
  static JobConfig parse_string(const std::string& text);

  /// Apply "k=v,k=v" overrides to the [params] section.
  void override_params(const std::string& csv);

  /// [group] family=dicyclic n=2 | family=s3 | family=cyclic n=4,
  /// also accepted in compact form "dicyclic:2", "s3", "cyclic:4".
  FiniteGroup group() const;
  static FiniteGroup group_from_label(const std::string& label);

  FamilyParams params() const;

  /// [algebra] family=D4 | D8 | S3:2..S3:5; builds the presentation.
  AlgebraPresentation algebra() const;
  std::string algebra_family() const;

  int degree_limit(int fallback) const;
};

}  // namespace qd
