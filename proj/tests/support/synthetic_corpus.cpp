#include "synthetic_corpus.hpp"

#include <cmath>
#include <string_view>

#include "arcorpus/filter.hpp"
#include "arcorpus/rng.hpp"

namespace arcorpus::testing {

namespace {

// Function words first, then content words; rank order drives the Zipf weights.
constexpr std::string_view kWords[] = {
    "في", "من", "على", "إلى", "عن", "أن", "مع", "التي", "الذي", "هذا", "هذه", "كان",
    "كانت", "بين", "بعد", "قبل", "حتى", "كما", "وقد", "ثم", "أو", "لم", "ما", "إن",
    "عام", "ذلك", "تلك", "حيث", "وفي", "ومن", "أيضا", "عند", "خلال", "منذ", "حول", "دون",
    "لكن", "قد", "هو", "هي", "كل", "بعض", "غير", "أكثر", "أول", "وكان", "ولد", "يقع",
    "تقع", "يبلغ", "تبلغ", "يعتبر", "تعتبر", "يعد", "تعد", "أصبح", "أصبحت", "قام", "قامت",
    "تأسست", "توفي", "عاش", "درس", "عمل", "نشر", "كتب", "المدينة", "الدولة", "العربية",
    "الحرب", "العالم", "الفترة", "السنة", "القرن", "التاريخ", "الحكومة", "الجامعة",
    "المنطقة", "الشمال", "الجنوب", "الشرق", "الغرب", "مدينة", "دولة", "منطقة", "قرية",
    "محافظة", "جمهورية", "مملكة", "الرئيس", "الملك", "الأمير", "الشعب", "السكان", "عدد",
    "نسبة", "مساحة", "كيلومتر", "كتاب", "رواية", "شاعر", "كاتب", "فيلم", "مسلسل", "ممثل",
    "مخرج", "لاعب", "كرة", "القدم", "فريق", "نادي", "بطولة", "كأس", "مباراة", "الموسم",
    "الدوري", "المنتخب", "الوطني", "الأولى", "الثانية", "الثالث", "الكبير", "الكبرى",
    "الصغيرة", "الجديد", "الجديدة", "القديم", "القديمة", "الإسلامية", "الإسلام",
    "المسلمين", "العرب", "العربي", "مصر", "سوريا", "العراق", "لبنان", "الأردن", "فلسطين",
    "المغرب", "الجزائر", "تونس", "ليبيا", "السودان", "اليمن", "السعودية", "الكويت", "قطر",
    "البحرين", "الإمارات", "أوروبا", "أمريكا", "آسيا", "أفريقيا", "فرنسا", "بريطانيا",
    "ألمانيا", "إيطاليا", "إسبانيا", "روسيا", "الصين", "اليابان", "الهند", "تركيا", "إيران",
    "نهر", "البحر", "جبل", "الجبال", "الساحل", "الصحراء", "المياه", "الأرض", "الطبيعة",
    "المناخ", "الزراعة", "الصناعة", "التجارة", "الاقتصاد", "السياسة", "الثقافة", "العلوم",
    "الفن", "الموسيقى", "الأدب", "اللغة", "الشعر", "الفلسفة", "الطب", "الهندسة",
    "الرياضيات", "الفيزياء", "الكيمياء", "الأحياء", "الحيوانات", "النباتات", "الأشجار",
    "الطيور", "الأسماك", "نوع", "أنواع", "جنس", "فصيلة", "عائلة", "الإنسان", "الناس",
    "المجتمع", "الأسرة", "الأطفال", "النساء", "الرجال", "المرأة", "الرجل", "الحياة",
    "الموت", "السلام", "الجيش", "القوات", "المعركة", "الاحتلال", "الاستقلال", "الثورة",
    "الحكم", "السلطة", "القانون", "الدستور", "البرلمان", "الانتخابات", "الحزب", "المجلس",
    "الوزير", "وزارة", "الشركة", "المؤسسة", "المشروع", "البرنامج", "النظام", "الشبكة",
    "الإنترنت", "الحاسوب", "التلفزيون", "الإذاعة", "الصحيفة", "المجلة", "الإعلام",
    "الأخبار", "المعلومات", "البيانات", "الدراسة", "البحث", "المدرسة", "التعليم", "الطلاب",
    "المعلم", "الأستاذ", "الدكتور", "العلماء", "الباحثين", "الطريق", "السكك", "الحديد",
    "المطار", "الميناء", "السيارة", "الطائرة", "السفينة", "القطار", "الماء", "النار",
    "الهواء", "الشمس", "القمر", "النجوم", "السماء", "الكواكب", "الفضاء", "المركز",
    "الوسط", "الجزء", "الأجزاء", "المجموعة", "العديد", "الكثير", "القليل", "الأخرى",
    "الآخر", "أخرى", "كبيرة", "كبير", "صغير", "جديد", "قديم", "مهم", "مهمة", "رئيسي",
    "رئيسية", "عالمي", "عالمية", "محلي", "تاريخي", "تاريخية", "سياسي", "اقتصادي",
    "اجتماعي", "ثقافي", "ديني", "علمي", "العاصمة", "عاصمة", "الأكبر", "أكبر", "أهم",
    "أشهر", "أحد", "إحدى", "بشكل", "خاص", "عامة", "بسبب", "نتيجة", "بالإضافة", "إضافة",
    "باسم", "اسم", "يسمى", "تسمى", "المعروف", "المعروفة", "يعرف", "تعرف", "الميلادي",
    "الهجري", "يناير", "فبراير", "مارس", "أبريل", "مايو", "يونيو", "يوليو", "أغسطس",
    "سبتمبر", "أكتوبر", "نوفمبر", "ديسمبر", "القاهرة", "دمشق", "بغداد", "بيروت", "الرياض",
    "والتي", "والذي", "بالقرب", "الواقعة", "الشهيرة", "الحديثة", "الوسطى", "العليا",
    "السفلى", "المتحدة", "الأمريكية", "الأوروبية", "الدولي", "الدولية", "الحالي", "الحالية",
};

constexpr std::string_view kLatinGlosses[] = {"Wikipedia", "Paris", "history", "ISBN", "km",
                                              "UNESCO", "Al-Azhar", "FIFA"};
constexpr std::string_view kPunct[] = {"،", "؛", ":", "\"", "-", "(", ")"};
constexpr char32_t kDiacritics[] = {0x064E, 0x064F, 0x0650, 0x0651, 0x0652, 0x064B};

class ZipfSampler {
 public:
  explicit ZipfSampler(std::size_t n) : cdf_(n) {
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      acc += 1.0 / std::pow(static_cast<double>(i) + 60.0, 0.7);
      cdf_[i] = acc;
    }
    for (auto& c : cdf_) c /= acc;
  }

  std::size_t draw(Rng& rng) const {
    const double u = rng.uniform_real();
    std::size_t lo = 0, hi = cdf_.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (cdf_[mid] < u) lo = mid + 1; else hi = mid;
    }
    return lo;
  }

 private:
  std::vector<double> cdf_;
};

void append_cp(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Raw rendering of one word: occasional tashkeel after letters, occasional
// elongation, and the lam-alef presentation form where it applies.
std::string render_word(std::string_view word, Rng& rng) {
  std::string out;
  const bool vocalize = rng.uniform_real() < 0.08;
  const bool elongate = rng.uniform_real() < 0.01;
  std::size_t i = 0;
  while (i < word.size()) {
    // "لا" is D9 84 D8 A7.
    if (word.substr(i, 4) == "\xD9\x84\xD8\xA7" && rng.uniform_real() < 0.3) {
      append_cp(out, 0xFEFB);
      i += 4;
      continue;
    }
    const auto lead = static_cast<unsigned char>(word[i]);
    const std::size_t len = lead < 0x80 ? 1 : lead < 0xE0 ? 2 : 3;
    const auto letter = word.substr(i, len);
    out.append(letter);
    if (elongate && i == 0) {
      out.append(letter);
      out.append(letter);
    }
    if (vocalize) append_cp(out, kDiacritics[rng.uniform_index(std::size(kDiacritics))]);
    i += len;
  }
  return out;
}

// Attached conjunctions, prepositions, and pronoun suffixes, as in running text.
std::string with_clitics(std::string_view word, Rng& rng) {
  std::string out;
  const bool definite = word.substr(0, 4) == "ال";
  const double u = rng.uniform_real();
  if (u < 0.10) out += "و";
  else if (definite && u < 0.18) out += rng.uniform_real() < 0.5 ? "ب" : "لل";
  else if (u < 0.20) out += "ف";
  if (definite && out == "لل") word.remove_prefix(4);
  out += word;
  if (!definite && word.size() > 4 && rng.uniform_real() < 0.08) {
    constexpr std::string_view kSuffixes[] = {"ها", "هم", "ه", "نا"};
    out += kSuffixes[rng.uniform_index(std::size(kSuffixes))];
  }
  return out;
}

std::string render_sentence(const ZipfSampler& zipf, Rng& rng) {
  const std::size_t words = 4 + rng.uniform_index(15);
  std::string out;
  for (std::size_t w = 0; w < words; ++w) {
    if (w > 0) out.push_back(' ');
    const double u = rng.uniform_real();
    if (u < 0.015) {
      out += std::to_string(1800 + rng.uniform_index(225));
      continue;
    }
    if (u < 0.025) {
      out += "(";
      out += kLatinGlosses[rng.uniform_index(std::size(kLatinGlosses))];
      out += ")";
      continue;
    }
    out += render_word(with_clitics(kWords[zipf.draw(rng)], rng), rng);
    if (rng.uniform_real() < 0.05) out += kPunct[rng.uniform_index(std::size(kPunct))];
  }
  out += rng.uniform_real() < 0.9 ? "." : "؟";
  return out;
}

}  // namespace

const std::vector<std::string>& base_lexicon() {
  static const std::vector<std::string> words(std::begin(kWords), std::end(kWords));
  return words;
}

std::vector<RawArticle> synthetic_articles(std::size_t count, std::uint64_t seed) {
  const ZipfSampler zipf(std::size(kWords));
  std::vector<RawArticle> out;
  out.reserve(count);
  for (std::size_t a = 0; a < count; ++a) {
    Rng rng(derive_seed(seed, a));
    RawArticle art;
    art.id = "article-" + std::to_string(a);
    const std::size_t paragraphs = 1 + rng.uniform_index(3);
    for (std::size_t p = 0; p < paragraphs; ++p) {
      const std::size_t sentences = 1 + rng.uniform_index(4);
      for (std::size_t s = 0; s < sentences; ++s) {
        if (s > 0) art.text.push_back(' ');
        art.text += render_sentence(zipf, rng);
      }
      art.text += "\n\n";
    }
    out.push_back(std::move(art));
  }
  return out;
}

std::vector<std::string> synthetic_clean_corpus(std::size_t min_lines, std::uint64_t seed) {
  const auto norm = NormalizerConfig::defaults();
  std::size_t articles = min_lines / 4 + 16;
  for (;;) {
    std::vector<std::string> candidates;
    for (const auto& art : synthetic_articles(articles, seed)) {
      for (auto& c : segment_article(art, norm)) candidates.push_back(std::move(c.text));
    }
    auto result = filter_corpus(candidates, FilterConfig{});
    if (result.kept.size() >= min_lines) {
      result.kept.resize(min_lines);
      return result.kept;
    }
    articles *= 2;
  }
}

}  // namespace arcorpus::testing
