#pragma once

#include "dcyc/cayley.hpp"
#include "dcyc/certificate.hpp"
#include "dcyc/checker.hpp"
#include "dcyc/dense_cycles.hpp"
#include "dcyc/error.hpp"
#include "dcyc/latin.hpp"
#include "dcyc/length_spec.hpp"
#include "dcyc/perm.hpp"
#include "dcyc/synthesis.hpp"
#include "dcyc/verify.hpp"
