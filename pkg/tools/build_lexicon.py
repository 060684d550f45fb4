#!/usr/bin/env python3
"""Generate src/sentimarket/sentiment/data/default_lexicon.tsv.

Hand-banded stem vocabulary expanded with regular English inflections
(verb -s/-ed/-ing, noun plurals, adjective -ly adverbs). Expanded forms
inherit the stem valence. Run from the repo root; output is committed.
"""
from __future__ import annotations

from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src/sentimarket/sentiment/data/default_lexicon.tsv"

ADJ_POS_STRONG = """
amazing awesome brilliant excellent exceptional extraordinary fabulous fantastic
flawless glorious incredible magnificent marvelous outstanding perfect phenomenal
spectacular splendid stellar superb sublime terrific wonderful wondrous majestic
miraculous dazzling breathtaking stunning triumphant heroic legendary unbeatable
""".split()

ADJ_POS_MODERATE = """
admirable affectionate beautiful beneficial blessed bright calm capable charming
cheerful clean clever comfortable compassionate confident considerate courageous
creative delightful dependable devoted eager effective efficient elegant
encouraging energetic enjoyable enthusiastic ethical excited exciting faithful
favorable fearless fortunate friendly fruitful fulfilling funny generous gentle
genuine gifted graceful gracious grateful happy harmonious healthy helpful
honest hopeful humorous ideal important impressive innovative inspiring
intelligent joyful joyous kind likable lively lovable lovely loyal lucky mature
memorable merciful mighty motivated noble optimistic passionate patient peaceful
playful pleasant pleased polite popular positive powerful praiseworthy precious
productive prosperous proud radiant reasonable refreshing reliable remarkable
resilient resourceful respectful robust safe satisfying secure sensible serene
sincere skillful smart sociable solid soothing spirited splendorous stable
steady strong successful supportive sweet talented thankful thorough thoughtful
thriving tidy tolerant tranquil trustworthy truthful upbeat uplifting valuable
versatile vibrant victorious warm wealthy welcoming wise witty worthy
""".split()

ADJ_POS_MILD = """
adequate affordable agreeable alert alive ample appropriate apt attentive
available balanced bearable brisk casual civil classic coherent compatible
complete consistent convenient cozy curious decent direct distinct diverse
dynamic easy eventful fair familiar fine fit flexible fresh functional handy
harmless honorable hygienic immune informative intact interesting light mild
modern modest neat new nice normal notable novel okay open orderly organized
painless plain plentiful practical precise presentable proper punctual quick
quiet ready realistic relevant simple smooth soft spacious special steadfast
sturdy sufficient suitable sunny tame tasty tender timely usable useful valid
viable vital vivid willing workable
""".split()

ADJ_NEG_STRONG = """
abysmal appalling atrocious awful catastrophic deadly deplorable despicable
devastating diabolical disastrous disgraceful disgusting dreadful evil
excruciating fatal ghastly gruesome heinous hideous horrendous horrible
horrific inhumane insufferable intolerable lethal monstrous nightmarish
obscene outrageous ruinous shocking sickening terrible tragic traumatic
unbearable unforgivable vicious vile wretched murderous savage brutal
""".split()

ADJ_NEG_MODERATE = """
afraid aggressive alarming angry annoying anxious arrogant ashamed bitter
bleak bogus broken careless chaotic cheap contagious corrupt cowardly cramped
cruel cursed damaged dangerous dark deceitful defective deficient dejected
depressed depressing desperate destructive dirty dishonest dismal disturbing
dire doomed dubious dull embarrassing envious erratic exhausted faulty
fearful feeble filthy flawed foolish fragile frantic fraudulent frightening
frustrated furious futile gloomy greedy grim grievous guilty harmful harsh
hateful hazardous heartbreaking heartless helpless hopeless hostile hurtful
idiotic ignorant ill illegal immoral inadequate incompetent inconsiderate
ineffective inferior infected insecure insulting invasive jealous lame lazy
lonely lost mad malicious mean messy miserable misleading moody nasty
needless negative neglected nervous obnoxious offensive painful panicked
paranoid pathetic pessimistic petty pointless poor powerless problematic
reckless regretful repulsive resentful restless risky rotten rude ruthless
sad scared scary selfish severe shady shaky shameful sick sinister sloppy
sluggish sore sorry spiteful stale stressed stressful stubborn stupid
suspicious terrified threatening tired toxic troubled troubling ugly unfair
unhappy unhealthy unjust unlucky unpleasant unreliable unsafe unstable
unwell upset useless vague vengeful violent vulnerable weak weary worried
worrisome worthless wrong
""".split()

ADJ_NEG_MILD = """
annoyed average awkward bland boring clumsy confused costly crowded delayed
dim disappointing disorganized distant doubtful drab dreary faint flat forced
forgetful fussy grumpy hasty hesitant idle impatient imperfect impractical
inconvenient indifferent insignificant irrelevant late limited loud mediocre
minor monotonous mundane noisy obsolete odd outdated overdue overpriced
pale passive pointy questionable rough rusty shallow slow stiff strange
tedious tense tricky trivial uncertain unclear uncomfortable uneven
unfamiliar unimpressive uninspired unpopular unusual vexing weird
""".split()

VERB_POS = """
accomplish achieve admire adore advance aid amaze appreciate approve assist
assure attract benefit bless bloom blossom boost brighten calm celebrate
cherish comfort commend compliment conquer cure delight donate embrace
empower enchant encourage endorse energize engage enhance enjoy enlighten
enrich entertain excel excite favor flourish forgive fortify gain gladden
glow grow guide heal help honor hope improve inspire invigorate laugh love
mend motivate nourish nurture overcome please praise prosper protect rally
reassure rebound recover refresh rejoice relax relieve renew repair rescue
respect restore revive reward satisfy save smile soothe stabilize strengthen
succeed support surge sustain thank thrill thrive treasure triumph trust
uplift welcome win
""".split()

VERB_NEG = """
abandon abuse accuse ache aggravate alarm anger annoy attack betray blame
bleed break bully burden collapse complain condemn confuse contaminate
corrupt crash cripple criticize crumble cry damage deceive decline defraud
degrade demolish deny deplete depress deprive despair destroy deteriorate
devastate disappoint discourage disgust dishearten dislike dismay disrupt
distort distress disturb doubt dread drown dump endanger erode exacerbate
exploit fail falter fear fight forfeit frighten frustrate grieve harass harm
hate hinder hoard humiliate hurt infect inflame injure insult intimidate
jeopardize kill lament lie lose manipulate menace mislead mock mourn neglect
offend oppress overwhelm panic plummet plunge poison pollute provoke punish
regret reject resent ridicule rob ruin sabotage scare scream shatter shrink
sicken sink slander slump smear sneer spoil squander stagnate starve steal
struggle suffer suffocate suppress suspect swindle terrify threaten torment
undermine upset victimize violate weaken weep worry worsen wreck
""".split()

NOUN_POS = """
abundance accomplishment achievement advantage affection aid ally asset award
benefit blessing bliss bonus boom bounty breakthrough care charity cheer
comfort compassion confidence courage courtesy cure delight dignity donation
ease encouragement energy enjoyment enthusiasm excellence fortune freedom
friend friendship fun generosity gift goodness goodwill grace gratitude
happiness harmony haven healing health hero honesty honor hope hug immunity
improvement innovation integrity joy justice kindness laughter liberty luck
mercy milestone miracle opportunity optimism paradise passion patience peace
pleasure praise privilege profit progress promise prosperity protection
pride rally rebound recovery refuge relief remedy resilience respect reward
safety sanctuary satisfaction savior smile solution stability strength
success support surplus sympathy talent treasure treat triumph trust truth
upturn vaccine victory vigor virtue warmth wealth welfare wellness wisdom
wonder
""".split()

NOUN_NEG = """
accident agony ailment alarm anger anguish anxiety apathy attack bankruptcy
betrayal blame blunder burden calamity casualty catastrophe chaos collapse
complaint conflict contagion corruption cost crash crime criminal crisis
cruelty curse damage danger death debt decay deceit decline defeat deficit
delay depression despair destruction disadvantage disappointment disaster
discomfort disease disgrace dishonesty dismay disorder dispute disruption
distress doom doubt downfall downturn dread emergency enemy epidemic failure
famine fear fever fiasco fight flaw fraud fright grief grievance hardship
harm hatred havoc hazard horror hostility humiliation hunger hurt illness
infection inflation injury injustice insult jeopardy loss lie meltdown
menace misery misfortune mistake misunderstanding nightmare outbreak pain
pandemic panic peril pessimism pity plague poison pollution poverty problem
rage recession regret rejection riot risk ruin sabotage scandal scarcity
shame shock shortage sickness slump sorrow stress strife struggle suffering
tension terror theft threat toll torment tragedy trauma trouble turmoil
uncertainty unemployment unrest victim violence virus warfare weakness woe
worry wound wreck
""".split()

# Direct entries that inflect badly or carry idiomatic weight.
EXTRA = {
    "good": 0.6, "bad": -0.6, "great": 0.7, "greater": 0.4, "greatest": 0.7,
    "bullish": 0.6, "bearish": -0.6, "rallying": 0.45, "selloff": -0.55,
    "congratulations": 0.75, "thanks": 0.6, "thx": 0.5, "yay": 0.7, "yes": 0.3,
    "wow": 0.5, "lol": 0.4, "haha": 0.5, "hooray": 0.8, "bravo": 0.7,
    "ok": 0.15, "okay": 0.15, "fine": 0.3, "better": 0.45, "best": 0.75,
    "worse": -0.45, "worst": -0.75, "no": -0.15, "nope": -0.3, "ugh": -0.5,
    "meh": -0.3, "damn": -0.45, "hell": -0.45, "wtf": -0.6, "omg": -0.2,
    "rip": -0.6, "sos": -0.5, "help": 0.0, "alas": -0.4, "oops": -0.3,
    "died": -0.8, "dies": -0.8, "dead": -0.8, "deaths": -0.8, "dying": -0.8,
    "won": 0.6, "lost": -0.5, "free": 0.4, "gratis": 0.3, "cheers": 0.55,
    "welcome": 0.45, "sorry": -0.3, "please": 0.1, "blessed": 0.7,
    "cured": 0.7, "recovered": 0.6, "infected": -0.6, "hospitalized": -0.65,
    "quarantined": -0.4, "stranded": -0.55, "evacuated": -0.45,
    "overwhelmed": -0.55, "exhausted": -0.5, "immune": 0.4, "healthy": 0.6,
    "unsure": -0.25, "hopeless": -0.7, "fearless": 0.5, "relieved": 0.5,
}

NEGATORS = """
not no never none nothing neither nor cannot cant can't dont don't doesnt
doesn't didnt didn't isnt isn't arent aren't wasnt wasn't werent weren't wont
won't wouldnt wouldn't couldnt couldn't shouldnt shouldn't aint ain't without
hardly barely scarcely lack lacks lacking
""".split()

INTENSIFIERS = {
    "very": 1.5, "really": 1.5, "extremely": 1.9, "incredibly": 1.8,
    "absolutely": 1.8, "totally": 1.6, "completely": 1.7, "utterly": 1.8,
    "highly": 1.6, "super": 1.7, "so": 1.4, "too": 1.3, "quite": 1.2,
    "pretty": 1.3, "deeply": 1.5, "truly": 1.5, "remarkably": 1.6,
    "exceptionally": 1.8, "especially": 1.4, "particularly": 1.4,
    "insanely": 1.9, "terribly": 1.7, "awfully": 1.6, "seriously": 1.4,
    "rather": 1.2, "fairly": 1.1, "somewhat": 0.7, "slightly": 0.5,
    "mildly": 0.6, "kinda": 0.8, "sorta": 0.8, "marginally": 0.5,
    "moderately": 0.8, "relatively": 0.9,
}

VOWELS = set("aeiou")


def plural(noun: str) -> str:
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and noun[-2] not in VOWELS:
        return noun[:-1] + "ies"
    return noun + "s"


def verb_forms(verb: str) -> list[str]:
    forms = [verb, plural(verb)]
    if verb.endswith("e") and not verb.endswith(("ee", "ye", "oe")):
        forms += [verb + "d", verb[:-1] + "ing"]
    elif verb.endswith("y") and verb[-2] not in VOWELS:
        forms += [verb[:-1] + "ied", verb + "ing"]
    else:
        stem = verb
        if (
            len(verb) >= 3
            and verb[-1] not in VOWELS | {"w", "x", "y"}
            and verb[-2] in VOWELS
            and verb[-3] not in VOWELS
            and verb[-1] not in "nr"  # avoid over-doubling; loses a few forms
        ):
            stem = verb + verb[-1]
        forms += [stem + "ed", stem + "ing"]
    return forms


def compare_forms(adj: str) -> list[str]:
    if adj.endswith("y") and adj[-2] not in VOWELS:
        stem = adj[:-1] + "i"
    elif adj.endswith("e"):
        stem = adj[:-1]
    elif len(adj) <= 4 and adj[-1] not in VOWELS and adj[-2] in VOWELS and adj[-3] not in VOWELS:
        stem = adj + adj[-1]
    elif len(adj) <= 5 and adj[-1] not in VOWELS and adj[-2] not in VOWELS:
        stem = adj
    else:
        return []
    return [stem + "er", stem + "est"]


def ness_form(adj: str) -> str | None:
    if adj.endswith("y") and adj[-2] not in VOWELS:
        return adj[:-1] + "iness"
    if adj.endswith(("ful", "less", "ed", "ing", "sh", "ct", "nt", "rm", "ck", "rk", "ft", "ld", "nd", "ht")) or len(adj) <= 5:
        return adj + "ness"
    return None


def adverb(adj: str) -> str | None:
    if adj.endswith(("ful", "less", "ous", "ive", "ant", "ent", "al", "ing", "ed")):
        return adj + "ly"
    if adj.endswith("ble"):
        return adj[:-1] + "y"
    if adj.endswith("ic"):
        return adj + "ally"
    if adj.endswith("y") and adj[-2] not in VOWELS:
        return adj[:-1] + "ily"
    return None


def build() -> dict[str, float]:
    entries: dict[str, float] = {}

    def put(token: str, valence: float):
        entries.setdefault(token, round(valence, 4))

    for bank, valence in (
        (ADJ_POS_STRONG, 0.85), (ADJ_POS_MODERATE, 0.6), (ADJ_POS_MILD, 0.3),
        (ADJ_NEG_STRONG, -0.85), (ADJ_NEG_MODERATE, -0.6), (ADJ_NEG_MILD, -0.3),
    ):
        for adj in bank:
            put(adj, valence)
            lyform = adverb(adj)
            if lyform:
                put(lyform, valence * 0.9)
            for form in compare_forms(adj):
                put(form, valence)
            nness = ness_form(adj)
            if nness:
                put(nness, valence * 0.9)

    for bank, valence in ((VERB_POS, 0.55), (VERB_NEG, -0.55)):
        for verb in bank:
            for form in verb_forms(verb):
                put(form, valence)

    for bank, valence in ((NOUN_POS, 0.5), (NOUN_NEG, -0.55)):
        for noun in bank:
            put(noun, valence)
            put(plural(noun), valence)

    for token, valence in EXTRA.items():
        entries[token] = valence
    return entries


def main():
    entries = build()
    lines = [
        "# default valence lexicon, generated by tools/build_lexicon.py",
        "# token<TAB>valence in [-1,1]",
    ]
    lines += [f"{t}\t{v}" for t, v in sorted(entries.items())]
    lines.append("[negators]")
    lines += sorted(set(NEGATORS))
    lines.append("[intensifiers]")
    lines += [f"{t}\t{m}" for t, m in sorted(INTENSIFIERS.items())]
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(entries)} entries to {OUT}")


if __name__ == "__main__":
    main()
