#pragma once

#include "cl2/classify.hpp"
#include "cl2/errors.hpp"
#include "cl2/multivector.hpp"
#include "cl2/oracle.hpp"
#include "cl2/textio.hpp"
#include "cl2/tolerances.hpp"
#include "cl2/transcend.hpp"
