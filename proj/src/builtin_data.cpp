#include "fpc/builtin_data.hpp"

namespace fpc {

std::string_view builtin_task_catalog_csv() {
    static constexpr std::string_view csv =
        R"(task,complexity,optimistic,pessimistic,most_likely
HTML conversion,low,0:30:00,3:00:00,1:45:00
HTML conversion,average,1:00:00,4:00:00,2:30:00
HTML conversion,high,1:30:00,6:00:00,3:45:00
PDF conversion,standard,0:30:00,0:30:00,0:30:00
Multimedia inserting,low,0:30:00,2:00:00,1:15:00
Multimedia inserting,average,1:00:00,3:30:00,2:15:00
Multimedia inserting,high,1:30:00,6:00:00,3:45:00
Image creation and treatment,low,0:30:00,2:30:00,1:30:00
Image creation and treatment,average,2:00:00,5:30:00,3:45:00
Image creation and treatment,high,4:00:00,12:00:00,9:00:00
Form creation,low,0:30:00,4:00:00,2:30:00
Form creation,average,2:00:00,8:00:00,6:00:00
Form creation,high,4:00:00,12:00:00,9:00:00
Layout creation and development,low,8:00:00,8:00:00,8:00:00
Layout creation and development,average,19:00:00,24:00:00,21:30:00
Layout creation and development,high,38:00:00,40:00:00,39:00:00
Layout adequation,standard,3:00:00,8:00:00,5:30:00
Layout montage,low,8:00:00,9:00:00,8:30:00
Layout montage,average,22:00:00,24:00:00,23:00:00
Layout montage,high,36:00:00,40:00:00,38:00:00
Creation of Tables,low,0:30:00,2:00:00,1:40:00
Creation of Tables,average,2:00:00,4:00:00,3:00:00
Creation of Tables,high,4:00:00,8:00:00,6:00:00
Creation of CSS,low,4:00:00,6:00:00,5:00:00
Creation of CSS,average,12:00:00,12:00:00,12:00:00
Creation of CSS,high,24:00:00,24:00:00,24:00:00
Creation of JS/ASP functions,low,3:00:00,3:00:00,3:00:00
Creation of JS/ASP functions,average,5:00:00,5:00:00,5:00:00
Creation of JS/ASP functions,high,7:00:00,7:00:00,7:00:00
"Adequation SQL, JS/ASP functions",low,2:30:00,2:30:00,2:30:00
"Adequation SQL, JS/ASP functions",average,3:30:00,3:30:00,3:30:00
"Adequation SQL, JS/ASP functions",high,4:30:00,4:30:00,4:30:00
Creating SP/SQL and components,low,4:30:00,4:30:00,4:30:00
Creating SP/SQL and components,average,6:30:00,6:30:00,6:30:00
Creating SP/SQL and components,high,9:00:00,9:00:00,9:00:00
Adequation of procedure,low,0:20:00,0:25:00,0:23:00
Adequation of procedure,average,0:50:00,1:00:00,0:55:00
Adequation of procedure,high,1:50:00,2:20:00,2:00:00
Creating maintenance page,standard,0:05:00,0:10:00,0:08:00
Survey with the client,standard,24:00:00,36:00:00,32:00:00
Site conversion to CMS,high,240:00:00,472:00:00,320:00:00
)";
    return csv;
}

std::string_view builtin_factors_json() {
    static constexpr std::string_view config =
        R"({
  "step_factors": {
    "survey": 3.2,
    "elaboration": 5.8,
    "tests": 2.6,
    "alteration": 1.5,
    "implantation": 1.2
  },
  "language_factors": {
    "php_js_asp": 3.5,
    "html": 1.8,
    "java_cms_etl": 5.4
  },
  "tool_inertia": {
    "html": 1.00,
    "asp": 0.90,
    "cms_php": 0.70,
    "statistics_tools": 0.65,
    "management_tools": 0.60,
    "dba_tools": 0.52,
    "text_processors": 0.60,
    "text_editors": 0.50,
    "development_tools": 0.68,
    "humanware": 0.00,
    "etl": 0.36
  },
  "price_classes": {
    "new_implementation": 480.00,
    "adequation": 537.00
  },
  "currency_label": "R$"
}
)";
    return config;
}

}  // namespace fpc
