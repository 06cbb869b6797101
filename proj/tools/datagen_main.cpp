// Regenerates the bundled demo corpus (data/demo_wells.csv).

#include <iostream>
#include <string>

#include "wellkit/csv.hpp"
#include "wellkit/synthetic.hpp"

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : "data/demo_wells.csv";
  const wellkit::Dataset corpus = wellkit::make_demo_corpus();
  wellkit::write_csv_file(corpus, path);
  std::cout << "wrote " << corpus.record_count() << " records (" << corpus.wells.size()
            << " wells) to " << path << '\n';
  return 0;
}
