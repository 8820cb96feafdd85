package com.minimart.users;

import org.springframework.stereotype.Component;
import org.springframework.web.client.RestTemplate;

@Component
public class HealthProbe {

    private final RestTemplate restTemplate = new RestTemplate();

    public String ping(String endpointUrl) {
        return restTemplate.getForObject(endpointUrl, String.class);
    }
}
