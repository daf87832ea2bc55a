#pragma once

#include "ca/codegen.hpp"
#include "ca/complex.hpp"
#include "ca/errors.hpp"
#include "ca/expr.hpp"
#include "ca/integer.hpp"
#include "ca/laws.hpp"
#include "ca/lexer.hpp"
#include "ca/parser.hpp"
#include "ca/printer.hpp"
#include "ca/quaternion.hpp"
#include "ca/rational.hpp"
#include "ca/session.hpp"
#include "ca/structures.hpp"
#include "ca/type_tag.hpp"
#include "ca/value.hpp"
