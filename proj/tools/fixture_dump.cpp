// fixture_dump.cpp -- writes recomputed catalog fixtures to files.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT
//
// Helper for regenerating src/catalog_fixtures.inc: writes one text file per
// entry and fixture field into the directory given as the sole argument.
// Check regenerated text carefully before freezing it into the catalog.

#include <fstream>
#include <iostream>
#include <string>

#include "gograph/catalog.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: fixture_dump <output-directory>\n";
    return 1;
  }
  const std::string directory = argv[1];
  const auto write = [&directory](const std::string& name,
                                  const std::string& content) {
    std::ofstream out(directory + "/" + name);
    out << content;
  };
  for (const auto& info : gograph::catalog_list()) {
    const gograph::CatalogSpace entry = gograph::catalog_load(info.id);
    const gograph::CatalogFixtures fixtures = gograph::recompute_fixtures(entry);
    write(info.id + ".bracket_table.txt", fixtures.bracket_table);
    write(info.id + ".adjoint_operators.txt", fixtures.adjoint_operators);
    write(info.id + ".riemannian_system.txt", fixtures.riemannian_system);
    write(info.id + ".riemannian_graph.txt", fixtures.riemannian_graph);
    if (!fixtures.finsler_system.empty()) {
      write(info.id + ".finsler_system.txt", fixtures.finsler_system);
      write(info.id + ".finsler_graph.txt", fixtures.finsler_graph);
    }
    std::cout << info.id << " done\n";
  }
  return 0;
}
