#ifndef TMW_QPM_HPP
#define TMW_QPM_HPP

#include "tmw/common.hpp"

#endif
