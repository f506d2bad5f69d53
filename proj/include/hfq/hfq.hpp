#pragma once

#include "hfq/builders.hpp"
#include "hfq/covering.hpp"
#include "hfq/diagram.hpp"
#include "hfq/errors.hpp"
#include "hfq/grading.hpp"
#include "hfq/json_io.hpp"
#include "hfq/lens_oracle.hpp"
#include "hfq/rational.hpp"
#include "hfq/snf.hpp"
#include "hfq/spinc.hpp"
#include "hfq/validate.hpp"
