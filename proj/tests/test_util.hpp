#ifndef TROPBT_TEST_UTIL_HPP
#define TROPBT_TEST_UTIL_HPP

#include "tropbt/quartic.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace tropbt_test {

inline std::string data_file(const std::string& name) {
    return std::string(TROPBT_TEST_DATA) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline tropbt::QuarticSpec worked_example() {
    return tropbt::parse_spec(slurp(data_file("worked_example.q")));
}

} // namespace tropbt_test

#endif
