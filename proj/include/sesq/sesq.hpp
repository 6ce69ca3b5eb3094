#pragma once

#include "sesq/error.hpp"
#include "sesq/field.hpp"
#include "sesq/matrix.hpp"
#include "sesq/algebra.hpp"
#include "sesq/module.hpp"
#include "sesq/random.hpp"
#include "sesq/form.hpp"
#include "sesq/darrow.hpp"
#include "sesq/endoring.hpp"
#include "sesq/decide.hpp"
#include "sesq/io.hpp"
