"""Fixed English stopword list, embedded so builds never download anything.

Roughly 120 function words: articles, determiners, conjunctions, prepositions,
pronouns, and auxiliaries. Domain words never belong here.
"""

STOPWORDS: frozenset[str] = frozenset(
    """
    a an the this that these those each every both all any some such same
    other another few many much more most own only very

    and or but so if then than because while though until since

    of at by for with within without about against between among through
    during before after above below under over to from up down in out on off
    near behind beside beyond along across around upon into toward towards
    except

    i me my we us our you your he him his she her it its they them their who
    whom whose which what where when why how there here

    is am are was were be been being have has had do does did will would
    should can could may might must

    not no too also just as
    """.split()
)
