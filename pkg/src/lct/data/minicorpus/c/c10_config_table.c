#include <stdio.h>
#include <string.h>

struct configuration_entry {
    const char *setting_name;
    int setting_value;
};

static struct configuration_entry default_configuration_table[] = {
    {.setting_name = "retries", .setting_value = 3},
    {.setting_name = "timeout", .setting_value = 30},
    {.setting_name = "verbosity", .setting_value = 1},
};

int lookup_configuration_value(const char *requested_setting_name, int fallback_setting_value) {
    int table_entry_count = sizeof(default_configuration_table) / sizeof(default_configuration_table[0]);
    for (int entry_position = 0; entry_position < table_entry_count; entry_position++) {
        if (strcmp(default_configuration_table[entry_position].setting_name, requested_setting_name) == 0)
            return default_configuration_table[entry_position].setting_value;
    }
    return fallback_setting_value;
}

int main(void) {
    char requested_setting_buffer[64];
    int accumulated_setting_total = 0;
    while (scanf("%63s", requested_setting_buffer) == 1) {
        accumulated_setting_total = (accumulated_setting_total + lookup_configuration_value(requested_setting_buffer, -1));
    }
    printf("%d\n", accumulated_setting_total);
    return 0;
}
