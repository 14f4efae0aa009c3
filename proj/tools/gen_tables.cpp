// Regenerates the generator-table data files from the builtin construction.
// Usage: gen_tables <output-dir>
#include <fstream>
#include <iostream>

#include "twistkit/mapping_class.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_tables <output-dir>\n";
    return 2;
  }
  std::string dir = argv[1];
  for (int g = 2; g <= 4; ++g)
    for (int B = 0; B <= 2; ++B)
      for (int P = 1; P <= 3; ++P) {
        tk::Surface s{g, B, P};
        std::string path = dir + "/table_g" + std::to_string(g) + "B" + std::to_string(B) +
                           "P" + std::to_string(P) + ".json";
        std::ofstream out(path);
        if (!out) {
          std::cerr << "cannot write " << path << "\n";
          return 1;
        }
        out << tk::table_json(tk::builtin_table(s));
        std::cout << path << "\n";
      }
  return 0;
}
