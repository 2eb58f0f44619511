#pragma once

#include "permrules/analysis.hpp"
#include "permrules/engine.hpp"
#include "permrules/errors.hpp"
#include "permrules/reference.hpp"
#include "permrules/rules.hpp"
#include "permrules/schedule.hpp"
