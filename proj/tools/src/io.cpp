// Copyright (c) msgadv contributors.
// SPDX-License-Identifier: Apache-2.0
#include "io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace msgadv::cli {

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Report a line number rather than a byte offset.
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line;
    }
    throw ParseError(source + ":" + std::to_string(line), e.what());
  }
}

LassoSequence load_lasso(const std::string& path) {
  const json j = parse_json(read_text(path), path == "-" ? "<stdin>" : path);
  if (j.is_object() && j.contains("lasso") && !j.contains("cycle")) {
    return lasso_from_json(j["lasso"]);
  }
  return lasso_from_json(j);
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace msgadv::cli
