// Writes the example instances as canonical documents into the given directory.
#include <filesystem>
#include <iostream>

#include "dblgrp/corpus.hpp"
#include "dblgrp/io.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus <directory>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto& c : dblgrp::corpus()) {
    const dblgrp::Document doc = std::visit([](const auto& x) { return dblgrp::Document(x); }, c.object);
    dblgrp::save_document((dir / (c.name + ".json")).string(), doc);
    std::cout << c.name << "\n";
  }
  return 0;
}
