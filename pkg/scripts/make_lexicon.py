#!/usr/bin/env python3
"""Regenerate src/upsum/resources/lexicon.tsv.

Builds a stand-in word-root database: regular inflections are generated by
rule from base lemma lists, irregular and derivational forms are tabulated
explicitly. Output is a UTF-8 TSV `inflected<TAB>root<TAB>frequency`,
deterministically ordered, with every root mapping to itself.
"""

from __future__ import annotations

import collections
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "upsum" / "resources" / "lexicon.tsv"

VOWELS = "aeiou"

# Verbs whose final consonant doubles before -ed/-ing.
DOUBLING = set(
    """ban bar beg bet chat chop clap commit control dim drag drip drop drum
    equip flag flip grab grin grip hop hug jam jog knit map mob mop nap nod
    occur omit pat patrol permit pin plan plot plug pop prefer prop quiz refer
    regret rob rub scan scrub shop shrug sin sip skip slam slip snap spam spot
    stab stem step stir stop strap strip submit swap tan tap tip top transfer
    trap trim trot tug war whip wrap zip""".split()
)

IRREGULAR_VERBS = {
    "arise": ["arose", "arisen", "arises", "arising"],
    "awake": ["awoke", "awoken", "awakes", "awaking"],
    "bear": ["bore", "borne", "bears", "bearing"],
    "beat": ["beats", "beaten", "beating"],
    "become": ["became", "becomes", "becoming"],
    "begin": ["began", "begun", "begins", "beginning"],
    "bend": ["bent", "bends", "bending"],
    "bet": ["bets", "betting"],
    "bind": ["bound", "binds", "binding"],
    "bite": ["bit", "bitten", "bites", "biting"],
    "bleed": ["bled", "bleeds", "bleeding"],
    "blow": ["blew", "blown", "blows", "blowing"],
    "break": ["broke", "broken", "breaks", "breaking"],
    "breed": ["bred", "breeds", "breeding"],
    "bring": ["brought", "brings", "bringing"],
    "broadcast": ["broadcasts", "broadcasting"],
    "build": ["built", "builds", "building"],
    "burn": ["burnt", "burned", "burns", "burning"],
    "burst": ["bursts", "bursting"],
    "buy": ["bought", "buys", "buying"],
    "cast": ["casts", "casting"],
    "catch": ["caught", "catches", "catching"],
    "choose": ["chose", "chosen", "chooses", "choosing"],
    "cling": ["clung", "clings", "clinging"],
    "come": ["came", "comes", "coming"],
    "cost": ["costs", "costing"],
    "creep": ["crept", "creeps", "creeping"],
    "cut": ["cuts", "cutting"],
    "deal": ["dealt", "deals", "dealing"],
    "dig": ["dug", "digs", "digging"],
    "dive": ["dove", "dived", "dives", "diving"],
    "draw": ["drew", "drawn", "draws", "drawing"],
    "drink": ["drank", "drunk", "drinks", "drinking"],
    "drive": ["drove", "driven", "drives", "driving"],
    "eat": ["ate", "eaten", "eats", "eating"],
    "fall": ["fell", "fallen", "falls", "falling"],
    "feed": ["fed", "feeds", "feeding"],
    "feel": ["feels", "feeling"],
    "fight": ["fought", "fights", "fighting"],
    "find": ["found", "finds", "finding"],
    "flee": ["fled", "flees", "fleeing"],
    "fling": ["flung", "flings", "flinging"],
    "fly": ["flew", "flown", "flies", "flying"],
    "forbid": ["forbade", "forbidden", "forbids", "forbidding"],
    "forget": ["forgot", "forgotten", "forgets", "forgetting"],
    "forgive": ["forgave", "forgiven", "forgives", "forgiving"],
    "freeze": ["froze", "frozen", "freezes", "freezing"],
    "get": ["got", "gotten", "gets", "getting"],
    "give": ["gave", "given", "gives", "giving"],
    "go": ["went", "gone", "goes", "going"],
    "grow": ["grew", "grown", "grows", "growing"],
    "hang": ["hung", "hangs", "hanging"],
    "hear": ["heard", "hears", "hearing"],
    "hide": ["hid", "hidden", "hides", "hiding"],
    "hit": ["hits", "hitting"],
    "hold": ["held", "holds", "holding"],
    "hurt": ["hurts", "hurting"],
    "keep": ["kept", "keeps", "keeping"],
    "kneel": ["knelt", "kneels", "kneeling"],
    "know": ["knew", "known", "knows", "knowing"],
    "lead": ["led", "leads", "leading"],
    "lean": ["leant", "leaned", "leans", "leaning"],
    "leap": ["leapt", "leaped", "leaps", "leaping"],
    "leave": ["leaves", "leaving"],
    "lend": ["lent", "lends", "lending"],
    "let": ["lets", "letting"],
    "lie": ["lied", "lies", "lying", "lain"],
    "light": ["lit", "lights", "lighting"],
    "lose": ["lost", "loses", "losing"],
    "make": ["made", "makes", "making"],
    "mean": ["meant", "means", "meaning"],
    "meet": ["met", "meets", "meeting"],
    "pay": ["paid", "pays", "paying"],
    "prove": ["proved", "proven", "proves", "proving"],
    "put": ["puts", "putting"],
    "quit": ["quits", "quitting"],
    "read": ["reads", "reading"],
    "ride": ["rode", "ridden", "rides", "riding"],
    "ring": ["rang", "rung", "rings", "ringing"],
    "rise": ["risen", "rises", "rising"],
    "run": ["ran", "runs", "running"],
    "say": ["said", "says", "saying"],
    "see": ["sees", "seen", "seeing"],
    "seek": ["sought", "seeks", "seeking"],
    "sell": ["sold", "sells", "selling"],
    "send": ["sent", "sends", "sending"],
    "set": ["sets", "setting"],
    "shake": ["shook", "shaken", "shakes", "shaking"],
    "shed": ["sheds", "shedding"],
    "shine": ["shone", "shines", "shining"],
    "shoot": ["shot", "shoots", "shooting"],
    "show": ["showed", "shown", "shows", "showing"],
    "shrink": ["shrank", "shrunk", "shrinks", "shrinking"],
    "shut": ["shuts", "shutting"],
    "sing": ["sang", "sung", "sings", "singing"],
    "sink": ["sank", "sunk", "sinks", "sinking"],
    "sit": ["sat", "sits", "sitting"],
    "sleep": ["slept", "sleeps", "sleeping"],
    "slide": ["slid", "slides", "sliding"],
    "speak": ["spoke", "spoken", "speaks", "speaking"],
    "speed": ["sped", "speeds", "speeding"],
    "spend": ["spent", "spends", "spending"],
    "spin": ["spun", "spins", "spinning"],
    "spread": ["spreads", "spreading"],
    "spring": ["sprang", "sprung", "springs", "springing"],
    "stand": ["stood", "stands", "standing"],
    "steal": ["stole", "stolen", "steals", "stealing"],
    "stick": ["stuck", "sticks", "sticking"],
    "sting": ["stung", "stings", "stinging"],
    "strike": ["struck", "strikes", "striking"],
    "strive": ["strove", "striven", "strives", "striving"],
    "swear": ["swore", "sworn", "swears", "swearing"],
    "sweep": ["swept", "sweeps", "sweeping"],
    "swim": ["swam", "swum", "swims", "swimming"],
    "swing": ["swung", "swings", "swinging"],
    "take": ["took", "taken", "takes", "taking"],
    "teach": ["taught", "teaches", "teaching"],
    "tear": ["tore", "torn", "tears", "tearing"],
    "tell": ["told", "tells", "telling"],
    "think": ["thought", "thinks", "thinking"],
    "throw": ["threw", "thrown", "throws", "throwing"],
    "understand": ["understood", "understands", "understanding"],
    "wake": ["woke", "woken", "wakes", "waking"],
    "wear": ["wore", "worn", "wears", "wearing"],
    "weep": ["wept", "weeps", "weeping"],
    "win": ["won", "wins", "winning"],
    "wind": ["wound", "winds", "winding"],
    "withdraw": ["withdrew", "withdrawn", "withdraws", "withdrawing"],
    "write": ["wrote", "written", "writes", "writing"],
}

REGULAR_VERBS = """
abandon absorb accept access accompany accuse achieve acknowledge acquire act
adapt add address adjust admire admit adopt advance advise affect afford agree
aid aim alert allege allocate allow alter amend analyze announce answer
anticipate apologize appeal appear applaud apply appoint appreciate approach
approve argue arm arrange arrest arrive ask assemble assert assess assign
believe belong bolster
assist assume assure attach attack attempt attend attract audit authorize
avoid award back bake balance bank base battle behave belong benefit bid bill
blame blast block bloom board boast boil bolster bomb book boost border
borrow bother bounce brace brief broaden browse budget buffer bump burden
bury calculate call calm camp campaign cancel capture care carry carve cause
cease celebrate censor challenge change charge chart chase check cheer cite
claim clarify classify clean clear climb close coach collapse collect combat
combine comment communicate compare compensate compete compile complain
complete comply compose compute conceal concede concentrate concern conclude
condemn conduct confess confirm confront connect consider consist console
consolidate construct consult consume contact contain contend continue
contract contribute convene convert convey convict convince cook cooperate
coordinate cope copy correct counter cover crack crash create credit criticize
cross crowd cruise crush cultivate curb cure damage dance date debate decide
declare decline decorate decrease dedicate defeat defend defer define deliver
demand demonstrate denounce deny depart depend deploy deposit describe design
destroy detail detain detect deter deteriorate determine develop devote
dictate differ diminish direct disagree disappear discard discharge disclose
discount discourage discover discuss dismiss dispatch display dispute disrupt
dissolve distribute disturb divert divide document dominate donate double
doubt download draft drain dream dress drift drill drown dump earn ease echo
edit educate elect elevate eliminate embrace emerge emphasize employ enable
enact encounter encourage end endorse endure enforce engage enhance enjoy
enlist enrich enroll ensure enter entertain escalate escape escort establish
estimate evacuate evaluate evolve examine exceed exchange exclude execute
exercise exert exhaust exhibit exist expand expect expel experience expire
explain explode exploit explore export expose express extend extract face
facilitate fade fail fasten favor fear feature fetch file fill film filter
finance finish fire fish fit fix float flood flourish flow focus fold follow
force forecast form formulate foster frame fuel fulfill function fund gain
gather gauge generate govern graduate grant greet guard guess guide halt
hamper handle happen harass harm harvest haul head heal heat help hesitate
hinder hire honor hope host hunt hurry identify ignore illustrate imagine
implement imply import impose impress improve include incorporate increase
incur indicate infect inflate inflict inform inherit initiate inject injure
insert insist inspect inspire install insult insure integrate intend
intensify interact intercept interest interfere interpret interrupt intervene
interview introduce invade invent invest investigate invite involve isolate
issue join joke judge jump justify kick kidnap kill kiss label lack land last
laugh launch learn lease lecture levy license lift like limit line link list
listen live load lobby locate lock look loom loosen lower maintain manage
mandate manufacture march mark market marry match matter measure mediate
melt mention merge migrate mind mine minimize miss mistake mix mobilize
model modify monitor motivate mount mourn move multiply name narrow need
negotiate note notice notify number nurse obey object oblige observe obstruct
obtain occupy offer open operate oppose order organize oust outline overcome
overhaul overlook oversee overturn owe pack paint pardon park participate
pass pause perform persist persuade phase pick picture pile pilot place
plant play plead please pledge point police poll pollute ponder pool portray
pose position possess post postpone pour praise pray preach precede predict
prepare prescribe present preserve preside press pressure presume pretend
prevail prevent price print probe proceed process proclaim produce profit
progress prohibit project promise promote prompt pronounce propose prosecute
protect protest provide provoke publish pull pump punish purchase pursue push
qualify question quote race raid rain raise rally range rank rate ratify
reach react rebuild recall receive reckon recognize recommend reconsider
record recover recruit reduce reelect reflect reform refuse register regulate
reinforce reject relate relax release relieve rely remain remark remember
remind remove render renew rent repair repeat replace reply report represent
repress request require rescue resemble reserve reside resign resist resolve
respect respond restore restrain restrict result resume retain retire retreat
return reveal review revise revive reward rule rush sail sample sanction save
scale schedule score search seal season secure seem seize select separate
serve settle shape share shelter shift ship shock shoulder shout shrug sign
signal simplify slow smash smile smooth soar solve sort sound spare spark
spell spill sponsor sprawl spur squeeze stage stall stamp start starve state
station stay stimulate stockpile strain stream strengthen stress stretch
struggle study stun subject submerge subscribe subsidize succeed suffer
suggest suppress surge surround survey survive suspect suspend sustain talk
tackle target tax telephone tend term terminate test testify thank threaten
thrive tie tighten time tolerate topple torture total touch tour trace track
trade trail train transform translate transmit transport travel treat tremble
trigger trust try turn undergo undermine unfold unify unite unveil update
upgrade uphold urge use usher utilize vacate value vanish vary venture verify
veto view violate visit voice vote vow wait walk want warn wash waste watch
water wave weaken weigh welcome widen wish witness wonder work worry worsen
worship wound yield
""".split()

IRREGULAR_NOUNS = {
    "child": "children",
    "man": "men",
    "woman": "women",
    "foot": "feet",
    "tooth": "teeth",
    "mouse": "mice",
    "person": "people",
    "life": "lives",
    "leaf": "leaves",
    "half": "halves",
    "shelf": "shelves",
    "wife": "wives",
    "knife": "knives",
    "crisis": "crises",
    "analysis": "analyses",
    "basis": "bases",
    "medium": "media",
    "datum": "data",
    "criterion": "criteria",
    "phenomenon": "phenomena",
}

NOUNS = """
ability access accident account accusation acre act action activist activity
actor addition address administration admission adult advance advantage
adviser advocate affair age agency agenda agent agreement agriculture aid aide
air aircraft airline airport alarm alliance ally ambassador amount analyst
animal anniversary announcement appeal applicant application appointment
approach approval area argument arm army arrest arrival article artist
assault assembly assessment asset assistance association asylum athlete
atmosphere attack attempt attention attitude attorney audience author
authority avalanche average aviation award baby background bail balance
ballot band bank banker barrel barrier base basin battle beach bear behavior
belief benefit bid bill biologist bird birth blast blaze block blood board
boat body bomb bond bone book border boss boundary boy brain branch breach
break bridge brother budget building bureau bus business cabinet cable camp
campaign canal cancer candidate capacity capital captain car carbon career
cargo case cash casualty category cattle cause ceasefire cell center century
ceremony chain chairman challenge champion chance change channel chaos chapter
charge charity chart chemical chief child church circle circumstance citizen
city civilian claim clash class client climate clinic closure cloud club
coach coal coalition coast code collapse colleague college column combat
command commander comment commerce commission committee community company
comparison compensation competition complaint compound compromise computer
concern concert conclusion condition conduct conference confidence conflict
congress connection consensus consequence conservation consultant consumer
contact contempt content contest context contract contrast contribution
control controversy convention conversation convoy cooperation cop copy coral
corner corporation correspondent corruption cost cotton council counterpart
country countryside county couple courage course court cousin cover coverage
cow crackdown craft crash creation creature credit crew crime criminal
crisis critic crop crossing crowd crown cruise culture currency current
curriculum custody customer cut cycle dam damage danger data database
daughter day deal dealer death debate debris debt decade decision declaration
decline decrease defeat defendant defense deficit degree delay delegate
delegation delivery demand democracy demonstration density department
departure deployment deposit deposition depth deputy desert design desire
destination destruction detail detective development device diagnosis dialogue
diet difference difficulty dinner diplomat direction director disaster
discipline discount discovery discrimination discussion disease dispute
distance distribution district division doctor document dog dollar domain
donation donor door dose downtown dozen draft drama dream drill driver
drought drug duty earthquake economist economy edge edition editor education
effect efficiency effort election electricity element elephant embassy
emergency emission emphasis empire employee employer employment end enemy
energy enforcement engine engineer enterprise entrance environment
environmentalist episode equipment era error escape estate estimate ethic
evacuation event evidence examination example exception excerpt exchange
execution executive exercise exile existence exit expansion expedition
expense experience experiment expert explanation explosion export exposure
extension extent eye face facility fact factor factory failure faith fall
family fan fare farm farmer fashion fate father fault favor fear feature
federation fee festival fever field fight fighter figure file film filter
finance finding fire firefighter firm fish fisherman fishery flag fleet
flight flood floor flow flower flu focus food foot force forecast forest
form formula fortune forum fossil foundation founder fox fraction fraud
freedom frequency friend front frontier fuel function fund funeral future
gain gallery game gap garden gas gate gear gene general generation gesture
giant girl glacier glass goal gold good government governor grade grain
grant grass ground group growth guard guerrilla guest guidance guide gulf gun
habitat hail hall hand handful harassment harbor harm harvest hat hazard head
headline headquarters health hearing heart heat height helicopter hell help
hero highway hill history hit hole holiday home homeland hope horizon horse
hospital host hostage hotel hour house household housing humanity hurricane
husband ice idea identity ideology image impact import importance incentive
inch incident income independence index individual industry infection
inflation influence information infrastructure initiative injury inquiry
insect inspection inspector instance institute institution instruction
instrument insurance intelligence intent intention interest intern interview
invasion investigation investigator investment investor island issue item
jail job joint journal journalist judge judgment juice jungle jury justice
key kid kind king kingdom knowledge lab label labor laboratory lack lake land
landscape language lawmaker lawsuit lawyer layer leader leadership league
level liberty library license lieutenant light limit line link lion lip list
literature litigation loan lobby location lock logic loss lot love machine
magazine mainland majority maker mammal man management manager mandate manner
manufacturer map margin marine mark market marriage mass master match
mile woman foot tooth mouse
material matter mayor meal measure meat mechanism medal media medication
medicine meeting member membership memo memory merchant mercy merger message
metal meter method metro middle migration mile military militia mill million
mind mine minister ministry minority minute miracle missile mission mistake
model moment momentum money monitor monk monopoly monster month monument moon
morning mosque mother motion motive motor mountain mouth move movement movie
murder muscle museum music musician mystery name nation nature navy need
negotiation neighbor neighborhood nerve net network news newspaper night
nobody noise nomination north note notice notion novel nurse oath observer
occasion occupation ocean offense offer office officer official oil operation
operator opinion opponent opportunity opposition option order organism
organization origin outbreak outcome outlook output oven overhaul owner
ownership pace pack package pact page pain painting palace panel panic paper
parade parent park parliament part participant participation partner party
passage passenger passion past pastor path patient patrol pattern pause
payment peace peak peasant penalty pension percent percentage performance
period permission permit personnel perspective petition phase philosophy
phone photo photograph phrase physician piece pig pilot pipeline place plan
plane planet plant plastic plate platform player plaza plea pleasure pledge
plot poem poet point pole police policy politician politics poll pollution
pool population port portion position possibility post poster potential
poverty powder power practice precedent precinct prediction preference
pregnancy premier presence president press pressure prevention price pride
priest principle printer priority prison prisoner privacy private privilege
prize probe problem procedure process producer product production profession
professor profile profit program progress project promise promotion proof
propaganda property proportion proposal prosecution prosecutor prospect
protection protein protest protester province provision public publication
publicity publisher pump punishment purchase purpose quality quantity quarter
queen quest question quota race radar radiation radio raid rail railway rain
rainfall raise rally range rank ranking rate ratio reaction reader reality
rear reason rebel recession recipe record recovery reduction reef referendum
reform refuge refugee region register regulation regulator rehabilitation
relation release relief religion report reporter representative republic
reputation request requirement research researcher reserve reservoir
residence resident resignation resistance resolution resort resource respect
response responsibility rest restaurant restoration restriction result
retailer retirement reunion revenue review revolution reward rhetoric rice
ride rifle right ring riot rise risk rival river road rock rocket role roof
room root rope round route routine row rule ruler ruling rumor runway rural
sake salary sale sample sanction sand satellite scale scandal scene schedule
scheme scholar school science scientist scope score screen script sea search
season seat secretary section sector security seed segment selection senate
senator sense sentence sequence sergeant series session settlement shape
share shareholder shelter sheriff ship shipment shock shooting shop shore
shortage shot shoulder side siege sign signal signature site situation size
skill sky slope smoke snow society soil soldier solution son song source
space speaker species speech speed spending sphere spill spirit spokesman
sport spot spring square stability stadium staff stage stake standard star
statement station statistic status statute steel step stock storm story
strategy stream street strength stretch strike structure struggle student
studio study stuff style subject submarine subsidy substance suburb subway
success suggestion suicide suit summer summit sun supply support supporter
surface surgery surplus surprise survey survivor suspect suspension symbol
symptom system table tactic tale talent talk tank target task taste tax
teacher team tear technique technology teenager telephone television
temperature tension term territory terror terrorism terrorist test testimony
text theater theme theory therapy threat thunder ticket tide timber time
tissue title ton tone tool top topic tornado total tourism tourist tower town
trace track trade tradition traffic tragedy trail trainer transaction
transcript transfer transit transition transplant transport treasure
treatment treaty tree trend trial tribe tribunal tribute trip troop trouble
truce truck trust truth tunnel turn turnout type typhoon unemployment union
unit universe university uprising use user vaccine valley value van variety
vehicle vendor venture verdict version vessel veteran victim victory video
view village violation violence virus visa vision visit visitor voice volcano
volume volunteer vote voter wage walk wall war warehouse warning warrior
watch water wave way weakness wealth weapon weather web website week weekend
weight welfare west wheat wheel wind window wing winner winter wisdom witness
wolf word worker workforce workshop world worth wreck writer year youth zone
""".split()

ADJECTIVES = """
able abrupt absolute abstract absurd academic accurate active actual acute
additional adequate administrative advanced adverse affordable aggressive
agricultural alive alleged ambitious ample ancient angry annual anonymous
apparent appropriate arbitrary armed artificial asleep attractive automatic
available average aware awful bad bare basic beautiful big bitter bizarre
black blank blind blue bold brave brief bright broad brown brutal busy calm
capable careful cautious cheap chemical chief chronic civic civil classic
clean clear clever clinical cold collective colonial colorful comfortable
commercial common competitive complex comprehensive compulsory confident
conservative considerable consistent constant constitutional contemporary
content continuing controversial conventional cool corporate correct costly
crazy credible criminal critical crucial crude cruel cultural curious current
cynical daily damp dangerous dark dead deadly deaf dear decent decisive deep
defensive deliberate delicate democratic dense dependent desperate detailed
different difficult digital diplomatic dirty disabled distant distinct
diverse divine domestic dominant double dramatic dry dual dubious dull dumb
durable dynamic eager early eastern economic educational effective efficient
elderly electoral electric electronic elegant eligible emotional empty
endless enormous entire environmental equal essential ethnic everyday evident
exact excellent exclusive executive expensive experimental explicit explosive
express external extra extraordinary extreme fair faithful false familiar
famous fast fatal favorable federal fertile fierce final financial fine firm
fiscal fit flat flexible fluid fond foreign formal fortunate fragile free
frequent fresh friendly full fundamental funny future general generous
gentle genuine giant glad global golden good gradual grand grave gray great
green gross guilty handy happy hard harsh healthy heavy high historic
historical holy honest hostile hot huge human humble hungry ideal identical
ill illegal immediate immense imminent immune imperial implicit important
impressive inadequate independent indoor industrial inevitable infamous
informal inherent initial inner innocent intense interim internal
international intimate invisible islamic joint judicial junior keen key kind
large late lazy leading legal legislative legitimate lengthy lethal liable
liberal light likely limited liquid literary little live lively local logical
lone lonely long loose loud low loyal lucky mad main major mandatory marine
married massive mature maximum mean medical medium mental mere middle mild
military minimal minimum minor mobile moderate modern modest monetary moral
mutual mysterious narrow national native natural naval nearby neat necessary
negative nervous neutral new nice noble normal northern notable notorious
nuclear numerous objective obvious odd offensive official old online open
operational optimistic oral ordinary organic original outdoor outer outside
overall overseas painful pale parallel partial particular passive past
peaceful pending permanent persistent personal physical pink plain plastic
pleasant plenty polar political poor popular positive possible potential
powerful practical precious precise predictable pregnant premature
presidential pretty previous primary prime principal prior private probable
productive professional profitable profound progressive prominent proper
proud provincial public pure quick quiet radical random rapid rare rational
raw ready real realistic reasonable recent red regional regular related
relative relevant reliable religious remarkable remote renewable repeated
residential respective responsible retail rich rigid ripe risky rival robust
rough round routine royal rural sacred sad safe salty scarce scientific
secret secular secure senior sensible sensitive separate serious severe
shallow sharp short shy sick significant silent silly silver similar simple
single skilled slight slow small smart smooth social soft solar sole solid
sophisticated sore sound southern spare special specific spectacular
spiritual stable standard static statistical steady steep sticky stiff still
strange strategic strict strong stubborn stupid subsequent substantial subtle
sudden sufficient suitable sunny superb superior supreme sure surplus
suspicious sweet swift symbolic systematic tall technical temporary tender
tense terrible territorial thick thin thirsty thorough tight tiny tired top
total tough toxic traditional tragic tremendous tribal tropical true typical
ugly ultimate unable uncertain underground unfair unhappy uniform unique
united universal unlikely unprecedented unusual upcoming upper upset urban
urgent useful useless usual vague vain valid valuable vast verbal vertical
viable vibrant violent virtual visible visual vital vocal voluntary
vulnerable warm weak wealthy weekly western wet white whole wide widespread
wild willing wise wooden wrong young
""".split()

# Curated derivational pairs: the database collapses a handful of
# morphologically related forms onto a common root.
DERIVATIONAL = {
    "sexual": "sex",
    "sexually": "sex",
    "relationship": "relation",
    "relationships": "relation",
    "relational": "relation",
    "definition": "define",
    "definitions": "define",
    "melting": "melt",
    "governmental": "government",
    "presidential": "president",
    "congressional": "congress",
    "economical": "economy",
    "economics": "economy",
    "historic": "history",
    "historical": "history",
    "scientific": "science",
    "technological": "technology",
    "environmental": "environment",
    "educational": "education",
    "industrial": "industry",
    "financial": "finance",
    "residential": "residence",
    "regional": "region",
    "national": "nation",
    "international": "nation",
    "organizational": "organization",
    "constitutional": "constitution",
    "operational": "operation",
    "occupational": "occupation",
    "professional": "profession",
    "judicial": "justice",
    "criminal": "crime",
    "musical": "music",
    "medical": "medicine",
    "agricultural": "agriculture",
    "cultural": "culture",
    "natural": "nature",
    "naturally": "nature",
    "global": "globe",
    "colonial": "colony",
    "imperial": "empire",
    "militant": "militia",
    "electoral": "election",
    "managerial": "management",
    "parliamentary": "parliament",
    "revolutionary": "revolution",
    "volcanic": "volcano",
    "oceanic": "ocean",
    "coastal": "coast",
    "mountainous": "mountain",
    "glacial": "glacier",
    "rainy": "rain",
    "snowy": "snow",
    "windy": "wind",
    "stormy": "storm",
    "icy": "ice",
    "sunny": "sun",
    "cloudy": "cloud",
    "foggy": "fog",
    "muddy": "mud",
    "rocky": "rock",
    "sandy": "sand",
    "salty": "salt",
    "watery": "water",
    "bloody": "blood",
    "dusty": "dust",
}

# Forms with more than one plausible root: the loader must pick the most
# frequent one.
AMBIGUOUS = [
    ("found", "find", 9000),
    ("found", "found", 700),
    ("founded", "found", 700),
    ("founding", "found", 700),
    ("founds", "found", 700),
    ("lay", "lie", 2500),
    ("lay", "lay", 900),
    ("lays", "lay", 900),
    ("laid", "lay", 900),
    ("laying", "lay", 900),
    ("saw", "see", 8000),
    ("saw", "saw", 300),
    ("saws", "saw", 300),
    ("sawing", "saw", 300),
    ("left", "leave", 6000),
    ("left", "left", 1200),
    ("rose", "rise", 4000),
    ("rose", "rose", 600),
    ("roses", "rose", 600),
    ("ground", "grind", 400),
    ("ground", "ground", 3000),
    ("grind", "grind", 400),
    ("grinds", "grind", 400),
    ("grinding", "grind", 400),
    ("felt", "feel", 5000),
    ("felt", "felt", 200),
    ("wound", "wind", 900),
    ("wound", "wound", 1500),
]


def verb_forms(v: str) -> list[str]:
    forms = []
    if v.endswith(("s", "x", "z", "ch", "sh", "ss")):
        forms.append(v + "es")
    elif v.endswith("y") and len(v) > 1 and v[-2] not in VOWELS:
        forms.append(v[:-1] + "ies")
    elif v.endswith("o"):
        forms.append(v + "es")
    else:
        forms.append(v + "s")
    if v.endswith("e") and not v.endswith("ee"):
        forms.append(v + "d")
        forms.append(v[:-1] + "ing")
    elif v.endswith("y") and len(v) > 1 and v[-2] not in VOWELS:
        forms.append(v[:-1] + "ied")
        forms.append(v + "ing")
    elif v in DOUBLING:
        forms.append(v + v[-1] + "ed")
        forms.append(v + v[-1] + "ing")
    else:
        forms.append(v + "ed")
        forms.append(v + "ing")
    return forms


def noun_forms(n: str) -> list[str]:
    if n in IRREGULAR_NOUNS:
        plural = IRREGULAR_NOUNS[n]
    elif n.endswith(("s", "x", "z", "ch", "sh")):
        plural = n + "es"
    elif n.endswith("y") and len(n) > 1 and n[-2] not in VOWELS:
        plural = n[:-1] + "ies"
    elif n.endswith("fe"):
        plural = n[:-2] + "ves"
    else:
        plural = n + "s"
    return [plural, n + "'s"]


def adjective_forms(a: str) -> list[str]:
    forms = []
    short = len(a) <= 6 and not a.endswith(("ous", "ful", "ive", "al", "ic", "ed"))
    if short:
        if a.endswith("e"):
            forms += [a + "r", a + "st"]
        elif a.endswith("y") and len(a) > 1 and a[-2] not in VOWELS:
            forms += [a[:-1] + "ier", a[:-1] + "iest"]
        else:
            forms += [a + "er", a + "est"]
    if a.endswith("y") and len(a) > 1 and a[-2] not in VOWELS:
        forms.append(a[:-1] + "ily")
    elif a.endswith("le"):
        forms.append(a[:-1] + "y")
    elif a.endswith("ic"):
        forms.append(a + "ally")
    else:
        forms.append(a + "ly")
    return forms


def main() -> None:
    # entries[inflected][root] = frequency
    entries: dict[str, dict[str, int]] = collections.defaultdict(dict)
    root_freq: dict[str, int] = {}

    def freq_for(rank: int, scale: int) -> int:
        return max(scale // (rank + 2), 25)

    def add(form: str, root: str, freq: int) -> None:
        form, root = form.strip().lower(), root.strip().lower()
        if not form or not root:
            return
        prev = entries[form].get(root)
        if prev is None or freq > prev:
            entries[form][root] = freq

    def register_root(root: str, freq: int) -> int:
        kept = max(root_freq.get(root, 0), freq)
        root_freq[root] = kept
        return kept

    for rank, (root, forms) in enumerate(sorted(IRREGULAR_VERBS.items())):
        f = register_root(root, freq_for(rank, 900000))
        for form in forms:
            add(form, root, f)
    for rank, root in enumerate(sorted(set(REGULAR_VERBS))):
        f = register_root(root, freq_for(rank, 400000))
        for form in verb_forms(root):
            add(form, root, f)
    for rank, root in enumerate(sorted(set(NOUNS))):
        f = register_root(root, freq_for(rank, 300000))
        for form in noun_forms(root):
            add(form, root, f)
    for rank, root in enumerate(sorted(set(ADJECTIVES))):
        f = register_root(root, freq_for(rank, 200000))
        for form in adjective_forms(root):
            add(form, root, f)
    for form, root in sorted(DERIVATIONAL.items()):
        f = register_root(root, max(root_freq.get(root, 0), 50000))
        add(form, root, f)
    for form, root, f in AMBIGUOUS:
        register_root(root, f)
        add(form, root, f)

    # Identity rows for every root.
    for root, f in sorted(root_freq.items()):
        add(root, root, f)

    # Every emitted root must be a fixed point of the resolved mapping,
    # otherwise normalization would not be idempotent. Resolve each form to
    # its winning root (max frequency, ties to the smallest root), then
    # collapse chains like founded -> found -> find.
    def winner(form: str) -> str:
        roots = entries[form]
        return min(roots, key=lambda r: (-roots[r], r))

    def final_root(root: str, _seen: set[str] | None = None) -> str:
        seen = _seen or set()
        while root in entries and root not in seen:
            seen.add(root)
            nxt = winner(root)
            if nxt == root:
                break
            root = nxt
        return root

    collapsed: dict[str, dict[str, int]] = collections.defaultdict(dict)
    for form, roots in entries.items():
        for root, f in roots.items():
            target = final_root(root)
            prev = collapsed[form].get(target)
            if prev is None or f > prev:
                collapsed[form][target] = f

    rows = []
    for form in sorted(collapsed):
        for root, f in sorted(collapsed[form].items()):
            rows.append(f"{form}\t{root}\t{f}")
    OUT.write_text("\n".join(rows) + "\n", encoding="utf-8")
    print(f"{len(rows)} entries -> {OUT}")


if __name__ == "__main__":
    main()
