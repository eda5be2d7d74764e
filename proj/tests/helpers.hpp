#pragma once

#include <fstream>
#include <string>

#include "dgbv/io.hpp"

namespace dgbv::testing {

inline LoadedModel load(const std::string& name) {
    return load_model_file(std::string(DGBV_MODELS_DIR) + "/" + name + ".model");
}

inline Scalar sc(int num, int den = 1) { return Scalar{Rational{num, den}}; }

}  // namespace dgbv::testing
