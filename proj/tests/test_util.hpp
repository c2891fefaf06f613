// shared helpers for the test suites: fixture loading and random elements
#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "irrep/freealg.hpp"
#include "irrep/presentation.hpp"

inline std::string data_path(const std::string& name) {
  return std::string(IRREP_TEST_DATA) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline irrep::Presentation load_presentation(const std::string& name) {
  return irrep::parse_presentation(read_file(data_path(name)));
}

inline irrep::Scalar random_residue(std::mt19937_64& rng, std::uint64_t p) {
  return irrep::Scalar::residue(rng() % p, p);
}

inline irrep::Mat<irrep::Scalar> random_matrix(std::mt19937_64& rng, std::size_t n,
                                               std::uint64_t p) {
  irrep::Mat<irrep::Scalar> m(n, irrep::Scalar::zero(irrep::FieldSpec::GF(p)));
  for (auto& e : m.a) e = random_residue(rng, p);
  return m;
}

// e_{ij} matrix unit over GF(p) or QQ
inline irrep::Mat<irrep::Scalar> unit_matrix(std::size_t n, std::size_t i, std::size_t j,
                                             const irrep::FieldSpec& f) {
  irrep::Mat<irrep::Scalar> m(n, irrep::Scalar::zero(f));
  m.at(i, j) = irrep::Scalar::one(f);
  return m;
}
