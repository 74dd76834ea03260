#pragma once

#include "stickel/abelian_field.hpp"
#include "stickel/bernoulli.hpp"
#include "stickel/cyclotomic.hpp"
#include "stickel/dirichlet.hpp"
#include "stickel/group_ring.hpp"
#include "stickel/idempotent.hpp"
#include "stickel/iwasawa.hpp"
#include "stickel/logval.hpp"
#include "stickel/padic.hpp"
#include "stickel/serialize.hpp"
#include "stickel/stickelberger.hpp"
#include "stickel/util.hpp"
