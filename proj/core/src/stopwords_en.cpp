// SPDX-License-Identifier: Apache-2.0
#include "boir/text.hpp"

namespace boir {

// Bundled default English stoplist, 418 words, one per line.
const char* const kDefaultStopwords =
    "a\nabout\nabove\naccording\nacross\nafter\nafterwards\nagain\n"
    "against\nalbeit\nall\nalmost\nalone\nalong\nalready\nalso\n"
    "although\nalways\nam\namong\namongst\nan\nand\nanother\n"
    "any\nanybody\nanyhow\nanyone\nanything\nanyway\nanywhere\napart\n"
    "are\naround\nas\nat\nav\nbe\nbecame\nbecause\n"
    "become\nbecomes\nbecoming\nbeen\nbefore\nbeforehand\nbehind\nbeing\n"
    "below\nbeside\nbesides\nbetween\nbeyond\nboth\nbut\nby\n"
    "can\ncannot\ncanst\ncertain\ncf\nchoose\ncontrariwise\ncos\n"
    "could\ncu\nday\ndo\ndoes\ndoing\ndost\ndoth\n"
    "double\ndown\ndual\nduring\neach\neither\nelse\nelsewhere\n"
    "enough\net\netc\neven\never\nevery\neverybody\neveryone\n"
    "everything\neverywhere\nexcept\nexcepted\nexcepting\nexception\nexclude\nexcluding\n"
    "exclusive\nfar\nfarther\nfarthest\nfew\nff\nfirst\nfor\n"
    "formerly\nforth\nforward\nfrom\nfront\nfurther\nfurthermore\nfurthest\n"
    "get\ngo\nhad\nhalves\nhardly\nhas\nhast\nhath\n"
    "have\nhe\nhence\nhenceforth\nher\nhere\nhereabouts\nhereafter\n"
    "hereby\nherein\nhereto\nhereupon\nhers\nherself\nhim\nhimself\n"
    "hindmost\nhis\nhither\nhitherto\nhow\nhowever\nhowsoever\ni\n"
    "ie\nif\nin\ninasmuch\ninc\ninclude\nincluded\nincluding\n"
    "indeed\nindoors\ninside\ninsomuch\ninstead\ninto\ninward\ninwards\n"
    "is\nit\nits\nitself\njust\nkg\nkind\nkm\n"
    "last\nlatter\nlatterly\nless\nlest\nlet\nlike\nlittle\n"
    "ltd\nmany\nmay\nmaybe\nme\nmeantime\nmeanwhile\nmight\n"
    "more\nmoreover\nmost\nmostly\nmr\nmrs\nms\nmuch\n"
    "must\nmy\nmyself\nnamely\nneed\nneither\nnever\nnevertheless\n"
    "next\nno\nnobody\nnone\nnonetheless\nnoone\nnope\nnor\n"
    "not\nnothing\nnotwithstanding\nnow\nnowadays\nnowhere\nof\noff\n"
    "often\nok\non\nonce\none\nonly\nonto\nor\n"
    "other\nothers\notherwise\nought\nour\nours\nourselves\nout\n"
    "outside\nover\nown\nper\nperhaps\nplenty\nprovide\nquite\n"
    "rather\nreally\nround\nsaid\nsake\nsame\nsang\nsave\n"
    "saw\nsee\nseeing\nseem\nseemed\nseeming\nseems\nseen\n"
    "seldom\nselves\nsent\nseveral\nshalt\nshe\nshould\nshown\n"
    "sideways\nsince\nslept\nslew\nslung\nslunk\nsmote\nso\n"
    "some\nsomebody\nsomehow\nsomeone\nsomething\nsometime\nsometimes\nsomewhat\n"
    "somewhere\nspake\nspat\nspoke\nspoken\nsprang\nsprung\nstave\n"
    "staves\nstill\nsuch\nsupposing\nthan\nthat\nthe\nthee\n"
    "their\nthem\nthemselves\nthen\nthence\nthenceforth\nthere\nthereabout\n"
    "thereabouts\nthereafter\nthereby\ntherefore\ntherein\nthereof\nthereon\nthereto\n"
    "thereupon\nthese\nthey\nthis\nthose\nthou\nthough\nthrice\n"
    "through\nthroughout\nthru\nthus\nthy\nthyself\ntill\nto\n"
    "together\ntoo\ntoward\ntowards\nugh\nunable\nunder\nunderneath\n"
    "unless\nunlike\nuntil\nup\nupon\nupward\nupwards\nus\n"
    "use\nused\nusing\nvery\nvia\nvs\nwant\nwas\n"
    "we\nweek\nwell\nwere\nwhat\nwhatever\nwhatsoever\nwhen\n"
    "whence\nwhenever\nwhensoever\nwhere\nwhereabouts\nwhereafter\nwhereas\nwhereat\n"
    "whereby\nwherefore\nwherefrom\nwherein\nwhereinto\nwhereof\nwhereon\nwheresoever\n"
    "whereto\nwhereunto\nwhereupon\nwherever\nwherewith\nwhether\nwhew\nwhich\n"
    "whichever\nwhichsoever\nwhile\nwhilst\nwhither\nwho\nwhoa\nwhoever\n"
    "whole\nwhom\nwhomever\nwhomsoever\nwhose\nwhosoever\nwhy\nwill\n"
    "wilt\nwith\nwithin\nwithout\nworse\nworst\nwould\nwow\n"
    "ye\nyear\nyes\nyet\nyippee\nyou\nyour\nyours\n"
    "yourself\nyourselves\n";

}  // namespace boir
