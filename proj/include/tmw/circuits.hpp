#ifndef TMW_CIRCUITS_HPP
#define TMW_CIRCUITS_HPP

#include "tmw/common.hpp"

#endif
