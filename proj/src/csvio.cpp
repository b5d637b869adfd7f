#include "tmw/csvio.hpp"
