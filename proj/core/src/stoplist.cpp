// Copyright 2026 The newstrack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <fstream>
#include <sstream>

#include "newstrack/error.hpp"
#include "newstrack/preprocess.hpp"

namespace newstrack {
namespace {

// Keep in sync with data/stoplist_en.txt (checked by the unit tests).
constexpr std::string_view kDefaultStoplist = R"(
a
about
above
after
again
against
all
am
an
and
any
are
aren't
as
at
be
because
been
before
being
below
between
both
but
by
can
can't
cannot
could
couldn't
did
didn't
do
does
doesn't
doing
don't
down
during
each
few
for
from
further
had
hadn't
has
hasn't
have
haven't
having
he
he'd
he'll
he's
her
here
here's
hers
herself
him
himself
his
how
how's
i
i'd
i'll
i'm
i've
if
in
into
is
isn't
it
it's
its
itself
let's
me
more
most
mustn't
my
myself
no
nor
not
of
off
on
once
only
or
other
ought
our
ours
ourselves
out
over
own
same
shan't
she
she'd
she'll
she's
should
shouldn't
so
some
such
than
that
that's
the
their
theirs
them
themselves
then
there
there's
these
they
they'd
they'll
they're
they've
this
those
through
to
too
under
until
up
very
was
wasn't
we
we'd
we'll
we're
we've
were
weren't
what
what's
when
when's
where
where's
which
while
who
who's
whom
why
why's
will
with
won't
would
wouldn't
you
you'd
you'll
you're
you've
your
yours
yourself
yourselves
s
t
just
now
also
rt
mt
via
cc
ht
amp
gt
lt
http
https
)";

std::string normalize_term(std::string_view raw) {
  const auto tokens = tokenize(raw);
  std::string term;
  for (const auto& t : tokens) term += t;
  return term;
}

Stoplist parse_stoplist(std::istream& in) {
  std::vector<std::string> terms;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    terms.push_back(line.substr(first, last - first + 1));
  }
  return Stoplist(terms);
}

}  // namespace

Stoplist::Stoplist(std::span<const std::string> terms) {
  for (const auto& raw : terms) {
    auto term = normalize_term(raw);
    if (!term.empty()) terms_.insert(std::move(term));
  }
}

Stoplist Stoplist::default_english() {
  std::istringstream in{std::string(kDefaultStoplist)};
  return parse_stoplist(in);
}

Stoplist Stoplist::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open stoplist " + path.string());
  return parse_stoplist(in);
}

bool Stoplist::contains(std::string_view token) const {
  return terms_.find(std::string(token)) != terms_.end();
}

std::vector<std::string> Stoplist::sorted_terms() const {
  std::vector<std::string> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace newstrack
