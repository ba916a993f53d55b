#pragma once

#include "condw/belief_base.hpp"
#include "condw/conditional.hpp"
#include "condw/errors.hpp"
#include "condw/formula.hpp"
#include "condw/generator.hpp"
#include "condw/inference.hpp"
#include "condw/model_set.hpp"
#include "condw/postulates.hpp"
#include "condw/preferred_structure.hpp"
#include "condw/signature.hpp"
#include "condw/splitting.hpp"
#include "condw/tolerance.hpp"
#include "condw/world.hpp"
