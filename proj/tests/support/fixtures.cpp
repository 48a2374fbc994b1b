#include "fixtures.hpp"

#ifndef SURFWIT_CORPUS_DIR
#error "SURFWIT_CORPUS_DIR must be defined"
#endif

namespace fixture {

std::string corpus_path(const std::string& name) { return std::string(SURFWIT_CORPUS_DIR) + "/" + name; }

}  // namespace fixture
