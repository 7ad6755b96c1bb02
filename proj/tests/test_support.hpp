#pragma once

#include "taufan/algebra.hpp"

#include <string>

#ifndef TAUFAN_DATA_DIR
#define TAUFAN_DATA_DIR "data"
#endif

inline std::string data_path(const std::string& rel)
{
    return std::string(TAUFAN_DATA_DIR) + "/" + rel;
}

inline taufan::AlgebraPtr load_data_algebra(const std::string& name)
{
    return taufan::load_algebra(data_path("algebras/" + name));
}
