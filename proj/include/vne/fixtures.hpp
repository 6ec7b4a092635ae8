#pragma once

#include <string>
#include <vector>

#include "vne/io.hpp"

namespace vne {

// One checked-in figure fixture: the generated artifact, its constructive
// witness, and a small metadata block with the expected outcome.
struct Fixture {
  std::string name;  // directory under fixtures/
  Json artifact;
  Json witness;
  Json meta;
};

// The five canonical gadget fixtures, regenerated deterministically.
std::vector<Fixture> figure_fixtures();

// Writes fixtures under root (creating directories). Returns file count.
int write_fixtures(const std::string& root);

// Compares regenerated fixtures against the files under root byte for
// byte; returns the list of mismatched or missing paths.
std::vector<std::string> check_fixtures(const std::string& root);

}  // namespace vne
