#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace vnca {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace vnca
