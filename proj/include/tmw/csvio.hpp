#ifndef TMW_CSVIO_HPP
#define TMW_CSVIO_HPP

#include "tmw/common.hpp"

#endif
