#!/usr/bin/env python3
"""Train the bundled POS tagger on a template-generated corpus.

Regenerates src/reqlint/text/data/tagger_weights.rqlt deterministically and
reports accuracy on the hand-tagged corpus in tests/data/tagged_sentences.txt.
Run from the repository root:  python scripts/train_tagger.py
"""

import random
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from reqlint.text.tagger import PerceptronTagger  # noqa: E402

SEED = 20240811
ITERATIONS = 10
FILLS_PER_TEMPLATE = 160

NOUNS = """
    system user controller driver message call network database record file
    document password report requirement interface function page segment
    train track signal display cab group member operator administrator
    server client service device module component application program
    process task queue buffer cache memory disk screen window menu button
    field form table column row value parameter option setting
    configuration version backup log error warning event alarm status state
    mode level speed distance time date duration length size limit
    threshold range overlap route station area zone region layout format
    orientation content text sentence word character number identity
    identifier code key lock access permission role account session request
    response result output input condition target point danger release
    change operation action command instruction procedure step phase stage
    test check validation verification analysis evaluation measurement unit
    sensor actuator engine brake door light power voltage current battery
    circuit board chip antenna radio frequency channel connection link
    protocol packet frame header payload address port host node cluster
    resource capacity load traffic bandwidth latency throughput performance
    quality safety security reliability availability efficiency case lead
    composition username entry calculation infrastructure data example
    reading execution demand part paper temperature tunnel authentication
    deadline transaction maintenance environment architecture installation
    authorization notification integration navigation destination platform
""".split()

PLURAL_NOUNS = """
    systems users messages calls groups members pages segments characters
    trains tracks records files documents reports requirements functions
    parameters options settings versions errors warnings events levels
    modes types kinds sets lists items elements objects classes methods
    fields forms tables columns rows values keys codes roles accounts
    sessions requests responses results outputs inputs conditions targets
    points changes operations actions commands steps phases tests checks
    units sensors doors lights circuits channels connections links packets
    frames addresses ports hosts nodes resources limits thresholds ranges
    routes stations areas zones layouts formats contents texts sentences
    words numbers identities services devices entries cases drivers
    controllers cabs networks passwords displays operators transactions
    notifications destinations platforms environments deadlines
""".split()

BASE_VERBS = """
    provide display support include allow enable log store send receive
    process update delete create modify calculate define add show print
    employ acquire move open close start stop run execute perform handle
    manage monitor control check verify validate ensure maintain record
    report notify alert inform request respond accept reject confirm cancel
    save load read write access retrieve search find select filter sort
    count measure compare convert transform generate produce return
    transfer transmit connect disconnect register configure install remove
    activate deactivate unlock encrypt decrypt sign authenticate authorize
    grant deny restrict limit exceed reach detect identify locate trace
    follow initiate terminate complete finish resume pause restart reset
    restore archive list use be have do contain specify describe indicate
    occur exist appear require apply belong operate communicate
""".split()

VBZ_VERBS = """
    provides displays supports includes allows enables logs stores sends
    receives processes updates deletes creates modifies calculates defines
    adds shows prints employs acquires moves opens closes starts stops runs
    executes performs handles manages monitors controls checks verifies
    validates ensures maintains records reports notifies requests responds
    accepts rejects confirms cancels saves loads reads writes accesses
    retrieves searches finds selects filters sorts counts measures compares
    converts transforms generates produces returns transfers transmits
    connects registers configures installs removes activates encrypts signs
    authenticates authorizes grants denies restricts limits exceeds reaches
    detects identifies locates traces follows initiates terminates
    completes finishes resumes pauses restarts resets restores contains
    specifies describes indicates occurs exists appears requires applies
    belongs operates communicates types prints fails uses calls
""".split()

VBN_VERBS = """
    provided displayed supported included allowed enabled logged stored
    sent received processed updated deleted created modified calculated
    defined added shown printed employed acquired moved opened closed
    started stopped executed performed handled managed monitored controlled
    checked verified validated ensured maintained recorded reported
    notified accepted rejected confirmed cancelled saved loaded read
    written accessed retrieved searched found selected filtered sorted
    counted measured compared converted transformed generated produced
    returned transferred transmitted connected registered configured
    installed removed activated encrypted signed authenticated authorized
    granted denied restricted limited exceeded reached detected identified
    located traced initiated terminated completed finished resumed paused
    restarted reset restored specified described indicated required applied
    operated dispersed related based expected failed
""".split()

VBG_VERBS = """
    providing displaying supporting including allowing enabling logging
    storing sending receiving processing updating deleting creating
    modifying calculating defining adding showing printing employing
    acquiring moving opening closing starting stopping running executing
    performing handling managing monitoring controlling checking verifying
    validating ensuring maintaining recording reporting notifying accepting
    rejecting confirming cancelling saving loading reading writing
    accessing retrieving searching finding selecting filtering sorting
    counting measuring comparing converting transforming generating
    producing returning transferring transmitting connecting registering
    configuring installing removing activating encrypting signing
    authenticating authorizing granting denying restricting limiting
    exceeding reaching detecting identifying locating tracing initiating
    terminating completing finishing resuming pausing restarting resetting
    restoring releasing leading failing
""".split()

ADJECTIVES = """
    available secure maximum minimum possible necessary suitable specific
    external internal functional asynchronous stationary long short fast
    slow high low exact friendly easy simple complex automatic manual
    electronic digital mechanical electrical optical remote local global
    main primary secondary optional mandatory critical safe reliable
    robust stable consistent complete correct valid invalid active
    inactive visible hidden new old current previous next final initial
    early late big small large gradual sufficient certain several latter
    stale
    additional different similar equal equivalent separate single multiple
    double common rare frequent continuous periodic permanent temporary
    able online expected acceptable supplementary printer-friendly lead
    multi-driver on-board red
""".split()

COMPARATIVES = """
    faster slower higher lower longer shorter larger smaller greater
    better easier simpler safer stronger weaker newer older earlier later
    fewer bigger
""".split()

SUPERLATIVES = """
    fastest slowest highest lowest longest shortest largest smallest
    greatest best easiest simplest safest strongest weakest newest oldest
    earliest latest
""".split()

ADVERBS = """
    automatically immediately quickly safely correctly properly fully
    completely partially manually periodically continuously normally
    currently initially finally only also already still often usually
    typically directly separately independently simultaneously gradually
    originally additionally therefore however moreover
""".split()

MODALS = "shall will must may might can could should would".split()
DIGIT_WORDS = "2 3 5 10 16 20 60 96 100 128 160 256 500 1000 1024 4096".split()
PROPER = """
    GSM ETCS ERTMS EIRENE KeePass Windows Linux Java Python Unicode ASCII
    HTTP HTTPS TCP UDP USB GPS API SQL XML JSON HTML URL CPU RAM CDN SMS
""".split()

POOLS = {
    "N": [(w, "NN") for w in NOUNS],
    "NS": [(w, "NNS") for w in PLURAL_NOUNS],
    "V": [(w, "VB") for w in BASE_VERBS],
    "Z": [(w, "VBZ") for w in VBZ_VERBS],
    "P": [(w, "VBN") for w in VBN_VERBS if w.isalpha()],
    "D": [(w, "VBD") for w in VBN_VERBS if w.isalpha()],
    "G": [(w, "VBG") for w in VBG_VERBS],
    "J": [(w, "JJ") for w in ADJECTIVES],
    "R": [(w, "JJR") for w in COMPARATIVES],
    "S": [(w, "JJS") for w in SUPERLATIVES],
    "A": [(w, "RB") for w in ADVERBS],
    "M": [(w, "MD") for w in MODALS],
    "I": [(w, "IN") for w in """
        of in for with on by at from into within through during after
        before under over between without until upon per via against about
        above below near as while unless although though since because
        whether whereas once than except toward
    """.split()],
    "C": [(w, "CD") for w in DIGIT_WORDS],
    "NP": [(w, "NNP") for w in PROPER],
}

# Templates are space-separated word/TAG items; {X} slots draw from POOLS.
TEMPLATES = [
    "The/DT {N} {M} {V} the/DT {N} ./.",
    "The/DT {N} {M} {V} {NS} ./.",
    "The/DT {N} {M} be/VB {P} ./.",
    "The/DT {N} {M} be/VB {P} by/IN the/DT {N} ./.",
    "The/DT {N} {M} be/VB {P} within/IN the/DT {N} ./.",
    "A/DT {N} {M} not/RB {V} {C} {NS} ./.",
    "The/DT {N} {M} not/RB be/VB {P} ./.",
    "{NS} {M} never/RB {V} the/DT {N} ./.",
    "The/DT {N} does/VBZ not/RB {V} {NS} ./.",
    "It/PRP {M} be/VB {J} to/TO {V} the/DT {N} ./.",
    "It/PRP is/VBZ {J} that/IN the/DT {N} {Z} ./.",
    "This/DT {M} be/VB {P} for/IN each/DT {N} ./.",
    "This/DT {N} {M} {V} the/DT {N} ./.",
    "That/DT {N} is/VBZ {J} ./.",
    "The/DT {N} {Z} a/DT {N} that/WDT {Z} {NS} ./.",
    "A/DT {N} that/WDT is/VBZ not/RB {J} {M} be/VB {P} ./.",
    "The/DT {NS} that/WDT are/VBP {J} {M} {V} ./.",
    "The/DT {N} {Z} that/IN the/DT {N} is/VBZ {J} ./.",
    "Ensure/VB that/IN the/DT {N} {Z} the/DT {N} ./.",
    "The/DT {N} requires/VBZ that/IN {NS} be/VB {P} ./.",
    "Which/WDT {N} {Z} the/DT {N} ?/.",
    "Which/WDT {NS} are/VBP {J} ?/.",
    "Who/WP {Z} the/DT {N} ?/.",
    "What/WP {M} the/DT {N} {V} ?/.",
    "The/DT {N} whose/WP$ {N} is/VBZ {J} {M} {V} ./.",
    "When/WRB the/DT {N} is/VBZ {J} ,/, the/DT {N} {M} {V} ./.",
    "When/WRB the/DT {N} {Z} ,/, the/DT {N} {M} be/VB {P} ./.",
    "If/IN the/DT {N} {Z} ,/, the/DT {N} {M} {V} the/DT {N} ./.",
    "If/IN a/DT {N} is/VBZ {J} ,/, it/PRP {M} be/VB {P} ./.",
    "Where/WRB the/DT {N} is/VBZ {P} ,/, {NS} {M} {V} ./.",
    "The/DT {N} is/VBZ {R} than/IN the/DT {N} ./.",
    "The/DT {N} {Z} {R} {NS} ./.",
    "A/DT {R} {N} {M} be/VB {P} ./.",
    "The/DT {N} {M} {V} {R} {NS} for/IN the/DT {N} ./.",
    "The/DT {N} {M} be/VB {R} ./.",
    "one/CD or/CC more/JJR {N} {NS} {M} be/VB {P} ./.",
    "{C} or/CC more/JJR {NS} {M} {V} ./.",
    "more/JJR {NS} {M} be/VB {P} ./.",
    "The/DT {N} {M} {V} more/RBR {J} {NS} ./.",
    "The/DT {N} is/VBZ more/RBR {J} than/IN the/DT {N} ./.",
    "a/DT more/RBR {J} {N} {M} be/VB {P} ./.",
    "The/DT {N} is/VBZ less/RBR {J} ./.",
    "The/DT most/RBS {J} {N} {M} be/VB {P} first/RB ./.",
    "The/DT least/RBS {J} {N} {Z} last/RB ./.",
    "The/DT {S} {N} {M} be/VB {P} ./.",
    "The/DT {N} {Z} the/DT {S} {N} ./.",
    "The/DT {N} with/IN the/DT {S} {N} {Z} ./.",
    "The/DT {N} {M} {V} the/DT {N} {A} ./.",
    "The/DT {N} is/VBZ {A} {P} ./.",
    "{A} ,/, the/DT {N} {M} {V} the/DT {N} ./.",
    "The/DT {N} {M} be/VB {A} {P} into/IN the/DT {N} ./.",
    "For/IN {NS} between/IN a/DT {N} and/CC the/DT {N} ,/, it/PRP {M} be/VB {J} to/TO {V} the/DT {N} ./.",
    "Either/CC the/DT {N} {Z} the/DT {N} or/CC the/DT {N} {Z} the/DT {N} ./.",
    "In/IN the/DT {J} {N} ,/, the/DT {N} is/VBZ {A} {P} ./.",
    "The/DT {N} of/IN the/DT {N} {M} be/VB {P} in/IN the/DT {N} ./.",
    "The/DT {J} {N} of/IN a/DT {N} {M} be/VB {C} {NS} ./.",
    "A/DT {N} {M} {V} {J} {NS} ./.",
    "The/DT {N} {M} be/VB {J} for/IN {G} ./.",
    "The/DT {N} {M} {V} {N} {G} for/IN {J} {N} of/IN {NS} ./.",
    "{G} the/DT {N} {Z} the/DT {N} ./.",
    "The/DT {N} {M} {V} the/DT {N} during/IN the/DT {N} of/IN {N} {NS} ./.",
    "All/DT {NS} {P} to/TO the/DT {N} {M} be/VB {P} ./.",
    "For/IN example/NN ,/, if/IN {N} {Z} the/DT {N} ,/, both/DT {NS} {M} be/VB {P} ./.",
    "The/DT {N} has/VBZ {A} {P} {J} {NS} ./.",
    "{NP} {Z} the/DT {N} ./.",
    "The/DT {NP} {N} {M} {V} {C} {NS} per/IN {N} ./.",
    "The/DT {N} ,/, e.g./FW the/DT {N} ,/, {M} be/VB {P} ./.",
    "The/DT {N} (/( e.g./FW in/IN the/DT {J} {N} )/) {M} {V} ./.",
    "Some/DT {NS} are/VBP {P} ;/: others/NNS are/VBP not/RB ./.",
    "There/EX {M} be/VB a/DT {N} for/IN each/DT {N} ./.",
    "There/EX is/VBZ no/DT {N} in/IN the/DT {N} ./.",
    "No/DT {N} {M} {V} without/IN a/DT {J} {N} ./.",
    "Each/DT {N} {Z} a/DT {J} {N} ./.",
    "Every/DT {N} {M} have/VB a/DT {N} ./.",
    "Any/DT {N} {M} be/VB {P} at/IN any/DT {N} ./.",
    "Neither/DT the/DT {N} nor/CC the/DT {N} {M} {V} ./.",
    "The/DT {N} and/CC the/DT {N} {M} {V} {NS} ./.",
    "Users/NNS {M} {V} their/PRP$ {NS} ./.",
    "The/DT {N} {Z} its/PRP$ {N} ./.",
    "We/PRP {M} {V} the/DT {N} ./.",
    "They/PRP are/VBP {J} ./.",
    "He/PRP {Z} the/DT {N} ./.",
    "It/PRP {Z} {NS} to/TO the/DT {N} ./.",
    "The/DT {N} {M} {V} it/PRP ./.",
    "To/TO {V} the/DT {N} ,/, the/DT {N} {M} be/VB {J} ./.",
    "The/DT {N} {M} be/VB able/JJ to/TO {V} {NS} ./.",
    "A/DT {N} can/MD include/VB {J} {NS} ./.",
    "The/DT {J} {N} {M} not/RB exceed/VB {C} {NS} ./.",
    "The/DT {N} is/VBZ {P} on/IN the/DT {N} to/TO the/DT {N} ./.",
    "After/IN a/DT {J} {N} ,/, the/DT {N} {M} be/VB {P} ./.",
    "The/DT {N} was/VBD {P} before/IN the/DT {N} ./.",
    "The/DT {NS} were/VBD {P} ./.",
    "a/DT {N} of/IN {C} {NS} ./.",
    "not/RB all/DT {NS} are/VBP {J} ./.",
    "The/DT {N} {M} {V} at/IN least/JJS {C} {NS} ./.",
    "at/IN most/JJS {C} {NS} {M} be/VB {P} ./.",
    "The/DT {N} is/VBZ too/RB {J} ./.",
    "If/IN a/DT {N} is/VBZ either/CC too/RB {J} or/CC too/RB {J} ,/, it/PRP {M} be/VB {P} ./.",
    "The/DT {N} {M} be/VB {J} for/IN online/JJ reading/NN ./.",
    "The/DT {N} {D} the/DT {N} ./.",
    "{NS} {M} be/VB {P} {A} ./.",
    "The/DT {N} {M} be/VB {P} that/WDT {Z} the/DT {N} ./.",
    "The/DT {N} {M} be/VB {P} {I} the/DT {N} ./.",
    "The/DT {N} {Z} {I} the/DT {N} ./.",
    "A/DT {N} {M} be/VB {P} over/IN {C} {NS} ./.",
    "The/DT {N} is/VBZ too/RB {J} ,/, {P} over/IN {J} {NS} ./.",
    "The/DT {N} {M} be/VB {P} for/IN each/DT {N} as/IN {N} {N} ./.",
    "The/DT {N} is/VBZ part/NN of/IN a/DT {N} ./.",
    "The/DT {N} {N} {Z} the/DT {N} ./.",
    "The/DT {J} {N} {Z} the/DT {N} ./.",
    "Either/CC the/DT {N} {N} {Z} the/DT {N} or/CC the/DT {N} {N} {Z} the/DT {N} ./.",
    "Which/WDT {N} {D} the/DT {N} ?/.",
    "The/DT {N} {M} be/VB {P} in/IN the/DT {G} {N} ./.",
    "one/CD or/CC more/JJR {N} {NS} ./.",
    "a/DT member/NN of/IN one/CD or/CC more/JJR {N} {NS} ./.",
    "if/IN {N} {Z} a/DT {N} ,/, the/DT {N} {M} {V} ./.",
    "if/IN {N} {Z} \"/'' {N} \"/'' and/CC {N} is/VBZ part/NN of/IN a/DT {N} ./.",
    "The/DT {N} {N} {Z} {NS} ./.",
    "Either/CC the/DT {N} {N} {Z} the/DT {N} or/CC the/DT {N} {N} {Z} the/DT {N} ./.",
    "The/DT {N} of/IN one/CD or/CC more/JJR {N} {NS} {M} be/VB {P} ./.",
    "The/DT {N} {Z} {NS} while/IN {G} ./.",
    "The/DT {NS} were/VBD {G} ./.",
    "The/DT {N} was/VBD {G} the/DT {N} ./.",
    "While/IN {G} ,/, the/DT {N} {M} not/RB {V} ./.",
    "The/DT {N} {M} {V} unless/IN the/DT {N} is/VBZ {P} ./.",
    "The/DT {N} {M} {V} the/DT {N} if/IN {P} ./.",
    "if/IN {P} ,/, the/DT {N} {M} {V} the/DT {N} ./.",
]


def parse_template(template):
    items = []
    for piece in template.split():
        if piece.startswith("{"):
            items.append(("slot", piece[1:-1]))
        else:
            word, _, tag = piece.rpartition("/")
            items.append(("literal", (word, tag)))
    return items


def generate(rng):
    sentences = []
    parsed = [parse_template(t) for t in TEMPLATES]
    for items in parsed:
        for _ in range(FILLS_PER_TEMPLATE):
            words, tags = [], []
            for kind, value in items:
                if kind == "literal":
                    word, tag = value
                else:
                    word, tag = rng.choice(POOLS[value])
                words.append(word)
                tags.append(tag)
            sentences.append((words, tags))
    return sentences


def read_tagged(path):
    sentences = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        words, tags = [], []
        for item in line.split():
            word, _, tag = item.rpartition("/")
            words.append(word)
            tags.append(tag)
        sentences.append((words, tags))
    return sentences


def main():
    rng = random.Random(SEED)
    sentences = generate(rng)
    print(f"training on {len(sentences)} generated sentences")
    tagger = PerceptronTagger()
    tagger.train(sentences, iterations=ITERATIONS, seed=SEED)

    out = ROOT / "src" / "reqlint" / "text" / "data" / "tagger_weights.rqlt"
    tagger.save(out)
    print(f"wrote {out} ({out.stat().st_size} bytes)")

    eval_path = ROOT / "tests" / "data" / "tagged_sentences.txt"
    if eval_path.exists():
        correct = total = 0
        errors = []
        for words, gold in read_tagged(eval_path):
            guess = tagger.tag_words(words)
            for w, g, p in zip(words, gold, guess):
                total += 1
                if g == p:
                    correct += 1
                else:
                    errors.append((w, g, p))
        print(f"eval accuracy: {correct}/{total} = {correct / total:.4f}")
        for w, g, p in errors[:40]:
            print(f"  {w}: gold {g} guessed {p}")


if __name__ == "__main__":
    main()
