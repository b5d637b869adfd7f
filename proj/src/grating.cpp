#include "tmw/grating.hpp"
